#include "sweepcost/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace sweepcost {

double segment_distance(Point p, Point a, Point b) {
  return distance(p, segment_projection(p, a, b));
}

Point segment_projection(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return a + t * d;
}

namespace {

bool on_segment(Point p, Point a, Point b, double tol) {
  return segment_distance(p, a, b) <= tol;
}

// True when closed segments [a,b] and [c,d] share at least one point (up to tol).
bool segments_touch(Point a, Point b, Point c, Point d, double tol) {
  const double scale_ab = std::max(distance(a, b), 1e-300);
  const double scale_cd = std::max(distance(c, d), 1e-300);
  const double o1 = orient(a, b, c) / scale_ab;
  const double o2 = orient(a, b, d) / scale_ab;
  const double o3 = orient(c, d, a) / scale_cd;
  const double o4 = orient(c, d, b) / scale_cd;
  if (((o1 > tol && o2 < -tol) || (o1 < -tol && o2 > tol)) &&
      ((o3 > tol && o4 < -tol) || (o3 < -tol && o4 > tol))) {
    return true;
  }
  return on_segment(c, a, b, tol) || on_segment(d, a, b, tol) || on_segment(a, c, d, tol) ||
         on_segment(b, c, d, tol);
}

}  // namespace

Polygon validate_polygon(std::span<const Point> input) {
  const std::size_t n = input.size();
  if (n < 3) throw DegenerateInput("polygon needs at least 3 vertices, got " + std::to_string(n));
  for (const Point& p : input) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateInput("polygon has a non-finite coordinate");
    }
  }

  Polygon poly;
  poly.vertices_.assign(input.begin(), input.end());
  auto& v = poly.vertices_;

  poly.lo_ = poly.hi_ = v[0];
  for (const Point& p : v) {
    poly.lo_ = {std::min(poly.lo_.x, p.x), std::min(poly.lo_.y, p.y)};
    poly.hi_ = {std::max(poly.hi_.x, p.x), std::max(poly.hi_.y, p.y)};
  }
  poly.diagonal_ = distance(poly.lo_, poly.hi_);
  poly.tolerance_ = 1e-9 * poly.diagonal_;
  const double tol = poly.tolerance_;
  if (poly.diagonal_ == 0.0) throw DegenerateInput("all polygon vertices coincide");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(v[i], v[j]) <= tol) {
        throw DegenerateInput("repeated vertex at indices " + std::to_string(i) + " and " +
                              std::to_string(j));
      }
    }
  }

  // All vertices on one line: zero area, reported before the overlap test.
  std::size_t far = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (distance(v[0], v[i]) > distance(v[0], v[far])) far = i;
  }
  const bool collinear = std::all_of(v.begin(), v.end(), [&](const Point& p) {
    return std::abs(orient(v[0], v[far], p)) <= tol * distance(v[0], v[far]);
  });
  if (collinear) throw DegenerateInput("polygon has zero area (all vertices collinear)");

  // Pairwise edge test, run on the input order so reported edge indices match
  // the caller's list. Adjacent edges may only share their common vertex.
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point c = v[j];
      const Point d = v[(j + 1) % n];
      const bool next = (j == i + 1);
      const bool prev = (i == 0 && j == n - 1);
      if (next) {
        // Shared vertex b == c; fold-back if a lies on [c,d] or d lies on [a,b].
        if (on_segment(a, c, d, tol) || on_segment(d, a, b, tol)) throw SimplicityViolation(i, j);
      } else if (prev) {
        // Shared vertex a == d.
        if (on_segment(b, c, d, tol) || on_segment(c, a, b, tol)) throw SimplicityViolation(i, j);
      } else if (segments_touch(a, b, c, d, tol)) {
        throw SimplicityViolation(i, j);
      }
    }
  }

  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(v[i], v[(i + 1) % n]);
  if (std::abs(twice_area) <= tol * poly.diagonal_) throw DegenerateInput("polygon has zero area");
  if (twice_area < 0.0) std::reverse(v.begin(), v.end());
  poly.area_ = 0.5 * std::abs(twice_area);

  poly.cumulative_.resize(n + 1);
  poly.cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    poly.cumulative_[i + 1] = poly.cumulative_[i] + distance(v[i], v[(i + 1) % n]);
  }

  poly.convex_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[(i + n - 1) % n];
    const Point b = v[i];
    const Point c = v[(i + 1) % n];
    if (orient(a, b, c) / std::max(distance(a, c), 1e-300) < -tol) {
      poly.convex_ = false;
      break;
    }
  }
  return poly;
}

double polygon_area(const Polygon& polygon) { return polygon.area(); }

std::size_t Polygon::edge_at(double s) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - cumulative_.begin() - 1, 0));
  return std::min(idx, vertices_.size() - 1);
}

Point Polygon::boundary_point(double s) const {
  if (!(s >= 0.0 && s < perimeter())) {
    throw OutOfRange("arclength " + std::to_string(s) + " outside [0, " + std::to_string(perimeter()) +
                     ")");
  }
  const std::size_t e = edge_at(s);
  const double len = edge_length(e);
  const double t = len > 0.0 ? std::clamp((s - cumulative_[e]) / len, 0.0, 1.0) : 0.0;
  const Point a = vertices_[e];
  const Point b = vertices_[(e + 1) % vertices_.size()];
  return a + t * (b - a);
}

Point Polygon::point_at_lift(double lift) const {
  return boundary_point(BoundaryPos::from_lift(lift, perimeter()).s);
}

double Polygon::project_to_boundary(Point p) const {
  const std::size_t n = vertices_.size();
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices_[i];
    const Point b = vertices_[(i + 1) % n];
    const Point q = segment_projection(p, a, b);
    const double d = distance(p, q);
    if (d < best) {
      best = d;
      best_s = cumulative_[i] + distance(a, q);
    }
  }
  if (best_s >= perimeter()) best_s -= perimeter();
  return best_s;
}

double Polygon::boundary_distance(Point p) const {
  const std::size_t n = vertices_.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
  }
  return best;
}

Point boundary_point(const Polygon& polygon, double s) { return polygon.boundary_point(s); }

Location point_in_domain(const Polygon& polygon, Point x, double tol) {
  if (polygon.boundary_distance(x) <= tol) return Location::Boundary;
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > x.y) != (v[j].y > x.y)) {
      const double xc = v[j].x + (x.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (x.x < xc) inside = !inside;
    }
  }
  return inside ? Location::Interior : Location::Exterior;
}

BoundaryPos BoundaryPos::from_lift(double lift, double perimeter) {
  double s = std::fmod(lift, perimeter);
  if (s < 0.0) s += perimeter;
  if (s >= perimeter) s = 0.0;
  return {s, lift};
}

BoundaryTrajectory::BoundaryTrajectory(double perimeter, std::vector<double> lifts)
    : perimeter_(perimeter), lifts_(std::move(lifts)) {
  if (!(perimeter_ > 0.0)) throw DegenerateInput("trajectory perimeter must be positive");
  for (std::size_t k = 1; k < lifts_.size(); ++k) {
    if (std::abs(lifts_[k] - lifts_[k - 1]) >= 0.5 * perimeter_) {
      throw DegenerateInput("trajectory lift jumps by half the perimeter or more at sample " +
                            std::to_string(k));
    }
  }
}

double circular_distance(double s1, double s2, double perimeter) {
  double d = std::fmod(std::abs(s1 - s2), perimeter);
  return std::min(d, perimeter - d);
}

int winding_number(const BoundaryTrajectory& alpha, const BoundaryTrajectory& beta) {
  if (alpha.empty() || beta.empty()) throw EndpointMismatch("empty trajectory");
  const double perimeter = alpha.perimeter();
  if (std::abs(beta.perimeter() - perimeter) > 1e-9 * perimeter) {
    throw EndpointMismatch("trajectories live on boundaries of different length");
  }
  const double tol = 1e-9 * perimeter;

  // Shift beta's lift by a whole number of turns so both curves start at the same lift.
  const double start_gap = alpha.lifts().front() - beta.lifts().front();
  const double turns = std::round(start_gap / perimeter);
  if (std::abs(start_gap - turns * perimeter) > tol) {
    throw EndpointMismatch("trajectories do not share a start point");
  }
  const double end_gap = alpha.lifts().back() - (beta.lifts().back() + turns * perimeter);
  const double wn = std::round(end_gap / perimeter);
  if (std::abs(end_gap - wn * perimeter) > tol) {
    throw EndpointMismatch("trajectories do not share an end point");
  }
  return static_cast<int>(wn);
}

}  // namespace sweepcost
