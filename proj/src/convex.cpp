#include "sweepcost/convex.hpp"

#include <algorithm>
#include <limits>

namespace sweepcost {

WidthResult width(const Polygon& polygon) {
  if (!polygon.is_convex()) throw NotConvex("width requires a convex polygon");
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();

  auto height = [&](std::size_t e, std::size_t j) {
    const Point a = v[e];
    const Point b = v[(e + 1) % n];
    return orient(a, b, v[j % n]) / distance(a, b);
  };

  std::size_t j = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (height(0, k) > height(0, j)) j = k;
  }

  WidthResult best;
  best.width = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < n; ++e) {
    while (height(e, j + 1) > height(e, j)) j = (j + 1) % n;
    const double h = height(e, j);
    if (h < best.width) {
      const Point d = v[(e + 1) % n] - v[e];
      const double len = norm(d);
      best = {h, {-d.y / len, d.x / len}, j % n, e};
    }
  }
  return best;
}

namespace {

struct ArcArea {
  const Polygon& polygon;
  std::vector<double> prefix;  // prefix[k] = sum_{t<k} cross(v_t, v_{t+1})

  explicit ArcArea(const Polygon& p) : polygon(p), prefix(p.size() + 1, 0.0) {
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = prefix[t] + cross(v[t], v[(t + 1) % n]);
  }

  // Sum of cross terms over unwrapped edge indices [from, to).
  double edge_sum(long from, long to) const {
    const long n = static_cast<long>(polygon.size());
    auto ext = [&](long k) {
      const long q = k >= 0 ? k / n : -((-k + n - 1) / n);
      return prefix[static_cast<std::size_t>(k - q * n)] + static_cast<double>(q) * prefix.back();
    };
    return ext(to) - ext(from);
  }

  double operator()(double s, double s_end) const {
    const double perimeter = polygon.perimeter();
    const long n = static_cast<long>(polygon.size());
    const auto& v = polygon.vertices();

    const BoundaryPos start = BoundaryPos::from_lift(s, perimeter);
    const BoundaryPos end = BoundaryPos::from_lift(s_end, perimeter);
    const Point p = polygon.boundary_point(start.s);
    const Point q = polygon.boundary_point(end.s);

    const long e0 = static_cast<long>(polygon.edge_at(start.s)) +
                    n * static_cast<long>(std::floor((s - start.s) / perimeter + 0.5));
    long e1 = static_cast<long>(polygon.edge_at(end.s)) +
              n * static_cast<long>(std::floor((s_end - end.s) / perimeter + 0.5));
    if (e1 < e0) e1 = e0;
    if (e0 == e1) return 0.0;
    auto wrap = [n](long k) { return static_cast<std::size_t>(((k % n) + n) % n); };
    return cross(p, v[wrap(e0 + 1)]) + edge_sum(e0 + 1, e1) + cross(v[wrap(e1)], q) + cross(q, p);
  }
};

}  // namespace

double arc_region_twice_area(const Polygon& polygon, double s, double s_end) {
  return ArcArea(polygon)(s, s_end);
}

BisectingChord shortest_bisecting_chord(const Polygon& polygon, const BisectorOptions& options) {
  if (!polygon.is_convex()) throw NotConvex("bisecting chord requires a convex polygon");
  const ArcArea area(polygon);
  const double perimeter = polygon.perimeter();
  const double target = polygon.area();  // twice the half area

  // Area on the arc side grows monotonically with the partner position.
  auto partner = [&](double s) {
    double lo = s;
    double hi = s + perimeter;
    if (!(area(s, lo) <= target && area(s, hi) >= target)) {
      throw ConvergenceFailure("bisecting partner could not be bracketed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * perimeter; ++it) {
      const double mid = 0.5 * (lo + hi);
      (area(s, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto chord_length = [&](double s) {
    return distance(polygon.point_at_lift(s), polygon.point_at_lift(partner(s)));
  };

  const std::size_t anchors = std::max<std::size_t>(options.anchors, 4);
  const double step = perimeter / static_cast<double>(anchors);
  double best_s = 0.0;
  double best_len = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < anchors; ++k) {
    const double s = static_cast<double>(k) * step;
    const double len = chord_length(s);
    if (len < best_len) {
      best_len = len;
      best_s = s;
    }
  }

  // Golden-section polish around the best anchor.
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best_s - step;
  double hi = best_s + step;
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = chord_length(x1);
  double f2 = chord_length(x2);
  for (int it = 0; it < options.polish_iterations; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = chord_length(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = chord_length(x2);
    }
  }
  if (f1 < best_len) {
    best_len = f1;
    best_s = x1;
  }
  if (f2 < best_len) {
    best_len = f2;
    best_s = x2;
  }

  BisectingChord chord;
  const double other = partner(best_s);
  chord.s_a = BoundaryPos::from_lift(best_s, perimeter).s;
  chord.s_b = BoundaryPos::from_lift(other, perimeter).s;
  chord.a = polygon.boundary_point(chord.s_a);
  chord.b = polygon.boundary_point(chord.s_b);
  chord.length = distance(chord.a, chord.b);
  return chord;
}

ExtremalReport extremal_report(const Polygon& polygon, double sc) {
  ExtremalReport r;
  r.area = polygon.area();
  r.bound = sc * sc / std::sqrt(3.0);
  r.ratio = r.area * std::sqrt(3.0) / (sc * sc);
  r.convex = polygon.is_convex();
  r.violation = r.convex && r.ratio < 1.0 - 1e-3;
  return r;
}

}  // namespace sweepcost
