// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shapes.hpp"
#include "sweepcost/convex.hpp"
#include "sweepcost/simulator.hpp"
#include "sweepcost/solver.hpp"

using namespace sweepcost;

namespace {

constexpr std::size_t kSamples = 128;
constexpr std::size_t kGrid = 256;
constexpr std::size_t kSubsteps = 4;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Named {
  std::string name;
  Polygon polygon;
};

struct Solved {
  std::string name;
  Polygon polygon;
  SweepCostResult result;
  double seconds = 0.0;
};

Solved run_solver(const Named& n, std::size_t m) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepCostResult r = solve(n.polygon, sample_boundary(n.polygon, m));
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {n.name, n.polygon, std::move(r), dt};
}

std::vector<Named> convex_suite() {
  std::vector<Named> out{{"square", shapes::unit_square()},
                         {"rectangle 2x1", shapes::rectangle(2, 1)},
                         {"equilateral triangle", shapes::equilateral(2)},
                         {"regular hexagon", shapes::regular(6)}};
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> count(8, 30);
  for (int k = 0; k < 20; ++k) out.push_back({"hull " + std::to_string(k), shapes::random_hull(rng, count(rng))});
  return out;
}

std::vector<double> legs(const std::vector<double>& knots, int per_leg) {
  std::vector<double> out{knots.front()};
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    for (int i = 1; i <= per_leg; ++i) out.push_back(knots[k] + (knots[k + 1] - knots[k]) * i / per_leg);
  }
  return out;
}

struct EvasionCase {
  std::string name;
  Polygon polygon;
  std::vector<double> alpha;  ///< knots as fractions of the perimeter
  std::vector<double> beta;
};

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Named> suite = convex_suite();
  std::vector<Solved> solved;
  for (const Named& n : suite) solved.push_back(run_solver(n, kSamples));

  // 1. Convex equivalence.
  {
    bool ok = true;
    double worst = 0.0, slowest = 0.0;
    for (const Solved& s : solved) {
      const double w = width(s.polygon).width;
      const double dev = std::abs(s.result.value - w);
      worst = std::max(worst, dev - s.result.error_bound);
      slowest = std::max(slowest, s.seconds);
      if (dev > s.result.error_bound + 1e-6 || s.seconds > 10.0) {
        ok = false;
        std::printf("  %s: value %.9f width %.9f 2h %.6f (%.2fs)\n", s.name.c_str(), s.result.value, w,
                    s.result.error_bound, s.seconds);
      }
    }
    report(1, "convex equivalence", ok,
           fmt("%zu shapes, max(|SC-w| - 2h) = %.3e, slowest %.2fs", solved.size(), worst, slowest));
  }

  // 2. Disk.
  const Named disk{"128-gon", shapes::regular(128)};
  const Solved disk_solved = run_solver(disk, 256);
  {
    const double v = disk_solved.result.value, h2 = disk_solved.result.error_bound;
    const double chord = shortest_bisecting_chord(disk.polygon).length;
    const bool ok = v >= 2 - h2 - 0.02 && v <= 2 + h2 && std::abs(chord - 2) <= 0.02;
    report(2, "disk", ok, fmt("SC %.9f in [%.6f, %.6f], bisector %.9f", v, 2 - h2 - 0.02, 2 + h2, chord));
  }

  // 3. Ellipse.
  const Named ellipse{"ellipse a=2 b=1", shapes::ellipse(128, 2, 1)};
  const Solved ellipse_solved = run_solver(ellipse, kSamples);
  {
    const double v = ellipse_solved.result.value, h2 = ellipse_solved.result.error_bound;
    const double w = width(ellipse.polygon).width;
    const double tol = h2 + 0.02 * 2;
    const bool ok = std::abs(v - 2) <= tol && std::abs(w - 2) <= tol;
    report(3, "ellipse", ok, fmt("SC %.9f, width %.9f, tolerance %.6f", v, w, tol));
  }

  std::vector<Solved> all_convex = solved;
  all_convex.push_back(disk_solved);
  all_convex.push_back(ellipse_solved);

  // 4. Extremal equality.
  {
    const double side = 2 / std::pow(3.0, 0.25);
    const Named tri{"unit-area triangle", shapes::equilateral(side)};
    const Solved t = run_solver(tri, kSamples);
    const double ratio = extremal_report(tri.polygon, t.result.value).ratio;
    double lowest = std::numeric_limits<double>::infinity();
    for (const Solved& s : all_convex) lowest = std::min(lowest, extremal_report(s.polygon, s.result.value).ratio);
    const bool ok = ratio >= 0.98 && ratio <= 1.02 && lowest >= 1 - 0.02;
    report(4, "extremal equality", ok,
           fmt("triangle area*sqrt3/SC^2 = %.9f, min over %zu convex shapes %.6f", ratio, all_convex.size(), lowest));
  }

  // 5. Lower-bound dominance.
  {
    bool ok = true;
    double margin = std::numeric_limits<double>::infinity();
    for (const Solved& s : all_convex) {
      const double chord = shortest_bisecting_chord(s.polygon).length;
      margin = std::min(margin, s.result.value + s.result.error_bound + 1e-6 - chord);
      if (chord > s.result.value + s.result.error_bound + 1e-6) {
        ok = false;
        std::printf("  %s: bisector %.9f > SC %.9f + 2h\n", s.name.c_str(), chord, s.result.value);
      }
    }
    report(5, "lower-bound dominance", ok, fmt("%zu shapes, smallest slack %.6f", all_convex.size(), margin));
  }

  // 6. Sweep certification.
  {
    std::vector<Solved> targets = solved;
    targets.push_back(run_solver({"L-shape", shapes::l_shape()}, kSamples));
    bool ok = true;
    std::size_t cleared = 0;
    for (const Solved& s : targets) {
      try {
        const GeodesicDomain dom(s.polygon);
        const SensorFamily f = build_sensor_family(dom, s.result.alpha, s.result.beta, kSubsteps);
        const SweepVerdict v = verify_sweep(simulate(dom, f, kGrid));
        if (v.cleared && v.half_area_step) {
          ++cleared;
        } else {
          ok = false;
          std::printf("  %s: cleared=%d half-area crossing=%d\n", s.name.c_str(), v.cleared, v.half_area_step.has_value());
        }
      } catch (const Error& e) {
        ok = false;
        std::printf("  %s: %s\n", s.name.c_str(), e.what());
      }
    }
    report(6, "sweep certification", ok, fmt("%zu of %zu witnesses cleared at grid %zu", cleared, targets.size(), kGrid));
  }

  // 7. Evasion duality.
  {
    const std::vector<EvasionCase> cases{
        {"square, alpha=beta out and back", shapes::unit_square(), {0, 0.5, 0}, {0, 0.5, 0}},
        {"square, static sensors", shapes::unit_square(), {0.1, 0.1}, {0.1, 0.1}},
        {"square, split and rejoin", shapes::unit_square(), {0, 0.375, 0}, {0, -0.375, 0}},
        {"square, alpha=beta full turn", shapes::unit_square(), {0, 1}, {0, 1}},
        {"64-gon, one sensor out and back", shapes::regular(64), {0, 0.4, 0}, {0, 0, 0}},
        {"64-gon, split, rotate, rejoin", shapes::regular(64), {0, 0.3, 0.8, 0.55}, {0, -0.3, 0.2, 0.55}},
        {"L-shape, alpha=beta past the reflex corner", shapes::l_shape(), {0, 0.6, 0.1}, {0, 0.6, 0.1}},
        {"L-shape, split and rejoin", shapes::l_shape(), {0.1, 0.45, 0.1}, {0.1, -0.25, 0.1}},
        {"hexagon, long arc around a corner", shapes::regular(6), {0, 0.8, 0}, {0, 0, 0}},
        {"ellipse, crossing sensors", shapes::ellipse(96, 2, 1), {0, 0.25, -0.1, 0}, {0, -0.25, 0.1, 0}},
    };
    bool ok = true;
    std::size_t good = 0;
    for (const EvasionCase& c : cases) {
      const double per = c.polygon.perimeter();
      std::vector<double> a = c.alpha, b = c.beta;
      for (double& x : a) x *= per;
      for (double& x : b) x *= per;
      const BoundaryTrajectory alpha(per, legs(a, 32));
      const BoundaryTrajectory beta(per, legs(b, 32));
      try {
        if (winding_number(alpha, beta) != 0) throw DegenerateInput("case does not have winding zero");
        const GeodesicDomain dom(c.polygon);
        const SensorFamily f = build_sensor_family(dom, alpha, beta, kSubsteps);
        const ContamField field = simulate(dom, f, kGrid);
        const auto ev = evasion_path(c.polygon, f.alpha, f.beta);
        bool hidden = ev.has_value();
        std::size_t exposed = 0;
        if (ev) {
          for (std::size_t k = 0; k < field.steps(); ++k) {
            const Cell cell = field.nearest_domain_cell(c.polygon.point_at_lift(ev->lift(k)));
            if (field.state(k, cell) != CellState::Contaminated) ++exposed;
          }
          hidden = exposed == 0;
        }
        if (hidden) {
          ++good;
        } else {
          ok = false;
          std::printf("  %s: evader %s, exposed at %zu steps\n", c.name.c_str(), ev ? "found" : "missing", exposed);
        }
      } catch (const Error& e) {
        ok = false;
        std::printf("  %s: %s\n", c.name.c_str(), e.what());
      }
    }
    report(7, "evasion duality", ok, fmt("%zu of %zu winding-zero pairs keep the evader contaminated", good, cases.size()));
  }

  // 8. Non-convex blow-up.
  {
    const double floor = 1 / std::numbers::sqrt3;
    bool ok = true;
    std::string detail;
    double first_area = 0, last_area = 0, prev_excess = -1;
    for (double depth : {0.6, 0.8, 0.95}) {
      const Polygon p = shapes::pronged_triangle(depth);
      const SweepCostResult r = solve(p, sample_boundary(p, kSamples));
      const double excess = r.value * r.value / p.area() - std::numbers::sqrt3;
      if (r.value <= floor - r.error_bound || excess <= prev_excess || excess <= 0) ok = false;
      if (first_area == 0) first_area = p.area();
      last_area = p.area();
      prev_excess = excess;
      detail += fmt("depth %.2f: SC %.6f area %.6f SC^2/area %.4f; ", depth, r.value, p.area(), excess + std::numbers::sqrt3);
    }
    ok = ok && first_area >= 3 * last_area;
    report(8, "non-convex blow-up", ok, detail + fmt("area shrinks %.1fx", first_area / last_area));
  }

  // 9. Oracle equivalences.
  {
    std::mt19937 rng(909);
    std::vector<Polygon> polys{shapes::l_shape(), shapes::u_shape(), shapes::comb(), shapes::zigzag(),
                               shapes::pronged_triangle(0.7)};
    for (int n : {7, 8, 9, 10, 12}) polys.push_back(shapes::random_star(rng, n));
    double funnel_err = 0;
    int pairs = 0;
    for (const Polygon& p : polys) {
      const GeodesicDomain dom(p);
      std::uniform_real_distribution<double> ux(p.bbox_min().x, p.bbox_max().x), uy(p.bbox_min().y, p.bbox_max().y);
      for (int k = 0; k < 20; ++k) {
        Point ab[2];
        for (Point& q : ab) {
          do q = {ux(rng), uy(rng)};
          while (point_in_domain(p, q, p.tolerance()) == Location::Exterior);
        }
        const double want = oracle::visibility_distance(p, ab[0], ab[1]);
        funnel_err = std::max(funnel_err, std::abs(dom.distance(ab[0], ab[1]) - want) / std::max(want, 1e-300));
        ++pairs;
      }
    }
    double calipers_err = 0;
    for (int k = 0; k < 50; ++k) {
      const Polygon p = shapes::random_hull(rng, 8 + k % 23);
      const double want = oracle::sweep_width(p.vertices());
      calipers_err = std::max(calipers_err, std::abs(width(p).width - want) / want);
    }
    int instances = 0, mismatches = 0;
    for (const Polygon& p : polys) {
      for (std::size_t m : {8, 16, 24}) {
        const BoundarySampling s = sample_boundary(p, m);
        if (s.count() > 32) continue;
        const DistanceMatrix g = distance_matrix(p, s);
        mismatches += solve(s, g).value != oracle::bottleneck(g);
        ++instances;
      }
    }
    const bool ok = funnel_err <= 1e-9 && calipers_err <= 1e-4 && mismatches == 0;
    report(9, "oracle equivalences", ok,
           fmt("funnel %d pairs max rel err %.2e; calipers max rel err %.2e; bottleneck %d/%d exact", pairs, funnel_err,
               calipers_err, instances - mismatches, instances));
  }

  // 10. Strict-mode probe.
  {
    std::vector<Named> shapes_all = suite;
    shapes_all.push_back(disk);
    shapes_all.push_back(ellipse);
    shapes_all.push_back({"L-shape", shapes::l_shape()});
    shapes_all.push_back({"comb", shapes::comb()});
    shapes_all.push_back({"zigzag", shapes::zigzag()});
    for (double d : {0.6, 0.8, 0.95}) shapes_all.push_back({"prong", shapes::pronged_triangle(d)});
    bool ok = true;
    double max_gap = 0;
    std::string where = "none";
    SolveOptions strict;
    strict.strict = true;
    for (const Named& n : shapes_all) {
      const std::size_t m = n.polygon.size() > 64 ? 256 : kSamples;
      const BoundarySampling s = sample_boundary(n.polygon, m);
      const DistanceMatrix g = distance_matrix(n.polygon, s);
      const double weak = solve(s, g).value;
      const double mono = solve(s, g, strict).value;
      if (mono < weak - 1e-9) ok = false;
      if (mono - weak > max_gap) {
        max_gap = mono - weak;
        where = n.name;
      }
    }
    report(10, "strict-mode probe", ok,
           fmt("%zu shapes, max strict - weak gap %.3e (%s)", shapes_all.size(), max_gap, where.c_str()));
  }

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 10 criteria failed; total %.1fs\n", failures, total);
  return failures == 0 ? 0 : 1;
}
