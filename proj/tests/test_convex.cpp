#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "shapes.hpp"
#include "sweepcost/convex.hpp"

using namespace sweepcost;

TEST_CASE("width examples") {
  const WidthResult r = width(shapes::rectangle(2, 1));
  CHECK(r.width == doctest::Approx(1.0));
  CHECK(std::abs(r.direction.x) == doctest::Approx(0.0));
  CHECK(std::abs(r.direction.y) == doctest::Approx(1.0));
  CHECK(width(shapes::equilateral(2)).width == doctest::Approx(std::numbers::sqrt3).epsilon(1e-12));
  const double hex = width(shapes::regular(6)).width;
  CHECK(hex == doctest::Approx(std::numbers::sqrt3).epsilon(1e-12));
  CHECK(hex == doctest::Approx(oracle::sweep_width(shapes::regular(6).vertices())).epsilon(1e-6));
  CHECK_THROWS_AS(width(shapes::l_shape()), NotConvex);
}

TEST_CASE("width result: supporting lines enclose the polygon") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Polygon p = shapes::random_hull(rng, 8 + trial);
    const WidthResult r = width(p);
    CHECK(norm(r.direction) == doctest::Approx(1.0));
    const Point e0 = p.vertex(r.edge);
    const Point e1 = p.vertex((r.edge + 1) % p.size());
    CHECK(std::abs(dot(e1 - e0, r.direction)) <= 1e-9);
    const double tol = 1e-9 * p.bbox_diagonal();
    for (const Point& v : p.vertices()) {
      const double h = dot(v - e0, r.direction);
      CHECK(h >= -tol);
      CHECK(h <= r.width + tol);
    }
    CHECK(dot(p.vertex(r.vertex) - e0, r.direction) == doctest::Approx(r.width));
  }
}

TEST_CASE("ties between parallel edges resolve to the smallest index") {
  // A square: every edge attains the width; edge 0 wins.
  CHECK(width(shapes::unit_square()).edge == 0);
  CHECK(width(shapes::relabel(shapes::unit_square(), 1)).edge == 0);
}

TEST_CASE("property: calipers match the direction-sweep oracle") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const Polygon p = shapes::random_hull(rng, 8 + trial % 23);
    const double w = width(p).width;
    CHECK(w == doctest::Approx(oracle::sweep_width(p.vertices())).epsilon(1e-4));
    // The sweep is an upper bound even without refinement.
    CHECK(w <= oracle::sweep_width(p.vertices(), 3600, false) + 1e-12);
  }
}

TEST_CASE("property: width is rigid-motion invariant and scales linearly") {
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> u(-5, 5);
  std::uniform_real_distribution<double> sc(0.1, 10);
  for (int trial = 0; trial < 30; ++trial) {
    const Polygon p = shapes::random_hull(rng, 15);
    const double w = width(p).width;
    const double k = sc(rng);
    CHECK(width(shapes::transform(p, u(rng), {u(rng), u(rng)})).width == doctest::Approx(w).epsilon(1e-9));
    CHECK(width(shapes::transform(p, 0.0, {0, 0}, k)).width == doctest::Approx(k * w).epsilon(1e-9));
  }
}

TEST_CASE("shortest_bisecting_chord examples") {
  const BisectingChord sq = shortest_bisecting_chord(shapes::unit_square());
  CHECK(sq.length == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sq.length == doctest::Approx(oracle::bisector_length(shapes::unit_square())).epsilon(1e-6));

  const Polygon disk = shapes::regular(256);
  CHECK(std::abs(shortest_bisecting_chord(disk).length - 2.0) <= 0.02);

  const Polygon hex = shapes::make({{1, 0}, {0.5, 1}, {-0.5, 1}, {-1, 0}, {-0.5, -1}, {0.5, -1}});
  const BisectingChord c = shortest_bisecting_chord(hex);
  // Distance from the centre (origin) to the chord line.
  const double off = std::abs(cross(c.b - c.a, Point{0, 0} - c.a)) / c.length;
  CHECK(off <= 10 * hex.tolerance());

  CHECK_THROWS_AS(shortest_bisecting_chord(shapes::l_shape()), NotConvex);
}

TEST_CASE("bisecting chord splits the area in half") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const Polygon p = shapes::random_hull(rng, 10 + trial);
    const BisectingChord c = shortest_bisecting_chord(p);
    const double left = oracle::left_area(p.vertices(), c.a, c.b);
    CHECK(left == doctest::Approx(0.5 * p.area()).epsilon(1e-6));
    CHECK(p.boundary_distance(c.a) <= 1e-9 * p.bbox_diagonal());
    CHECK(p.boundary_distance(c.b) <= 1e-9 * p.bbox_diagonal());
    CHECK(c.length <= 0.5 * p.perimeter());
  }
}

TEST_CASE("property: bisector matches the dense anchor oracle") {
  std::mt19937 rng(35);
  std::vector<Polygon> polys{shapes::unit_square(), shapes::rectangle(2, 1), shapes::equilateral(1),
                             shapes::regular(6), shapes::regular(7)};
  for (int trial = 0; trial < 8; ++trial) polys.push_back(shapes::random_hull(rng, 12));
  for (const Polygon& p : polys) {
    const double got = shortest_bisecting_chord(p).length;
    const double want = oracle::bisector_length(p, 4000);
    // The oracle only samples anchors, so it can overshoot but not undershoot.
    CHECK(got <= want + 1e-9);
    CHECK(got == doctest::Approx(want).epsilon(2e-3));
  }
}

TEST_CASE("centrally symmetric polygons: chord through the centroid") {
  std::mt19937 rng(36);
  std::uniform_real_distribution<double> u(0.2, 1.5);
  for (int trial = 0; trial < 10; ++trial) {
    // Symmetric hull: half the points plus their reflections.
    std::vector<Point> pts;
    for (int k = 0; k < 6; ++k) {
      const double t = std::numbers::pi * k / 6 + 0.1 * u(rng);
      const double r = u(rng);
      pts.push_back({r * std::cos(t), r * std::sin(t)});
      pts.push_back({-r * std::cos(t), -r * std::sin(t)});
    }
    const Polygon p = shapes::make(shapes::convex_hull(pts));
    const BisectingChord c = shortest_bisecting_chord(p);
    const double off = std::abs(cross(c.b - c.a, Point{0, 0} - c.a)) / c.length;
    CHECK(off <= 10 * p.tolerance());
  }
}

TEST_CASE("extremal_report examples") {
  const Polygon tri = shapes::equilateral(2);
  const ExtremalReport eq = extremal_report(tri, std::numbers::sqrt3);
  CHECK(eq.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(eq.violation);

  const ExtremalReport sq = extremal_report(shapes::unit_square(), 1.0);
  CHECK(sq.ratio == doctest::Approx(std::numbers::sqrt3));
  CHECK(sq.bound == doctest::Approx(1 / std::numbers::sqrt3));

  const ExtremalReport prong = extremal_report(shapes::pronged_triangle(0.9), 0.6);
  CHECK_FALSE(prong.convex);
  CHECK(prong.ratio < 1.0);
  CHECK_FALSE(prong.violation);

  CHECK(extremal_report(shapes::unit_square(), 2.0).violation);
}
