#include "sweepcost/geodesic.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

namespace sweepcost {

namespace {

// Signed distance of c from the line through a and b (positive to the left).
double side(Point a, Point b, Point c) {
  const double len = distance(a, b);
  return len > 0.0 ? orient(a, b, c) / len : 0.0;
}

bool in_closed_triangle(Point p, Point a, Point b, Point c, double tol) {
  return side(a, b, p) >= -tol && side(b, c, p) >= -tol && side(c, a, p) >= -tol;
}

bool in_open_triangle(Point p, Point a, Point b, Point c, double tol) {
  return side(a, b, p) > tol && side(b, c, p) > tol && side(c, a, p) > tol;
}

}  // namespace

Triangulation triangulate(const Polygon& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  const double tol = polygon.tolerance();

  std::vector<std::size_t> next(n), prev(n);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }

  Triangulation tri;
  tri.triangles.reserve(n - 2);

  auto clip = [&](std::size_t i) {
    tri.triangles.push_back({prev[i], i, next[i]});
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
  };

  // Collinear corners have zero turn and are never clipped; they are resolved
  // once a neighbor is clipped. Ties go to the lowest index reached first.
  auto is_ear = [&](std::size_t i, bool strict) {
    const std::size_t p = prev[i];
    const std::size_t q = next[i];
    if (side(v[p], v[q], v[i]) >= -tol) return false;  // v[i] must be right of p->q, i.e. convex
    for (std::size_t r = next[q]; r != p; r = next[r]) {
      if (strict ? in_closed_triangle(v[r], v[p], v[i], v[q], tol)
                 : in_open_triangle(v[r], v[p], v[i], v[q], tol)) {
        return false;
      }
    }
    return true;
  };

  std::size_t remaining = n;
  std::size_t cursor = 0;
  while (remaining > 3) {
    bool clipped = false;
    std::size_t i = cursor;
    for (std::size_t k = 0; k < remaining; ++k, i = next[i]) {
      if (is_ear(i, true)) {
        cursor = next[i];
        clip(i);
        clipped = true;
        break;
      }
    }
    if (!clipped) {
      // Fallback for corners whose ear diagonal grazes another vertex.
      for (std::size_t k = 0; k < remaining; ++k, i = next[i]) {
        if (is_ear(i, false)) {
          cursor = next[i];
          clip(i);
          clipped = true;
          break;
        }
      }
    }
    if (!clipped) throw DegenerateInput("ear clipping found no ear");
    --remaining;
  }
  tri.triangles.push_back({prev[cursor], cursor, next[cursor]});

  tri.neighbors.assign(tri.triangles.size(), {-1, -1, -1});
  std::unordered_map<std::size_t, std::pair<int, int>> open_edges;
  for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
    const auto& T = tri.triangles[t];
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = T[(k + 1) % 3];
      const std::size_t b = T[(k + 2) % 3];
      const std::size_t key = std::min(a, b) * n + std::max(a, b);
      auto it = open_edges.find(key);
      if (it == open_edges.end()) {
        open_edges.emplace(key, std::make_pair(static_cast<int>(t), k));
      } else {
        const auto [u, ku] = it->second;
        tri.neighbors[t][k] = u;
        tri.neighbors[u][ku] = static_cast<int>(t);
        open_edges.erase(it);
      }
    }
  }
  return tri;
}

GeodesicDomain::GeodesicDomain(Polygon polygon)
    : polygon_(std::move(polygon)), triangulation_(triangulate(polygon_)) {}

GeodesicDomain::Located GeodesicDomain::locate(Point p) const {
  const double tol = polygon_.tolerance();
  const Location where = point_in_domain(polygon_, p, tol);
  if (where == Location::Exterior) throw PointOutsideDomain("query point lies outside the polygon");
  if (where == Location::Boundary) p = polygon_.point_at_lift(polygon_.project_to_boundary(p));

  const auto& v = polygon_.vertices();
  Located out{p, {}};
  int best = -1;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < triangulation_.triangles.size(); ++t) {
    const auto& T = triangulation_.triangles[t];
    const double margin =
        std::min({side(v[T[0]], v[T[1]], p), side(v[T[1]], v[T[2]], p), side(v[T[2]], v[T[0]], p)});
    if (margin >= -tol) out.triangles.push_back(static_cast<int>(t));
    if (margin > best_margin) {
      best_margin = margin;
      best = static_cast<int>(t);
    }
  }
  if (out.triangles.empty()) out.triangles.push_back(best);
  return out;
}

std::vector<int> GeodesicDomain::sleeve(const Located& a, const Located& b) const {
  const std::size_t count = triangulation_.triangles.size();
  std::vector<char> in_target(count, 0);
  for (int t : b.triangles) in_target[t] = 1;
  for (int t : a.triangles) {
    if (in_target[t]) return {t};
  }

  // Multi-source BFS: the first target reached closes the shortest dual-tree
  // path between the two triangle sets, so neither endpoint sits on a portal.
  std::vector<int> parent(count, -2);
  std::deque<int> queue;
  for (int t : a.triangles) {
    parent[t] = -1;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    for (int u : triangulation_.neighbors[t]) {
      if (u < 0 || parent[u] != -2) continue;
      parent[u] = t;
      if (in_target[u]) {
        std::vector<int> path;
        for (int w = u; w != -1; w = parent[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(u);
    }
  }
  throw NoPath("triangulation dual graph is disconnected");
}

GeodesicPath GeodesicDomain::shortest_path(const Located& a, const Located& b) const {
  if (a.point == b.point) return {{a.point}, 0.0};
  const std::vector<int> chain = sleeve(a, b);
  if (chain.size() == 1) return {{a.point, b.point}, sweepcost::distance(a.point, b.point)};

  const auto& v = polygon_.vertices();
  std::vector<std::pair<Point, Point>> portals;  // (left, right) seen when walking from a to b
  portals.reserve(chain.size() + 1);
  portals.emplace_back(a.point, a.point);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto& T = triangulation_.triangles[chain[k]];
    const auto& N = triangulation_.neighbors[chain[k]];
    const int corner = static_cast<int>(std::find(N.begin(), N.end(), chain[k + 1]) - N.begin());
    const Point right = v[T[(corner + 1) % 3]];
    const Point left = v[T[(corner + 2) % 3]];
    portals.emplace_back(left, right);
  }
  portals.emplace_back(b.point, b.point);

  std::vector<Point> path{a.point};
  Point apex = a.point;
  Point left = a.point;
  Point right = a.point;
  std::size_t apex_i = 0, left_i = 0, right_i = 0;

  for (std::size_t i = 1; i < portals.size(); ++i) {
    const auto [L, R] = portals[i];

    if (apex == right || orient(apex, right, R) >= 0.0) {
      if (apex == right || apex == left || orient(apex, left, R) < 0.0) {
        right = R;
        right_i = i;
      } else {
        path.push_back(left);
        apex = left;
        apex_i = left_i;
        right = left = apex;
        right_i = left_i = apex_i;
        i = apex_i;
        continue;
      }
    }

    if (apex == left || orient(apex, left, L) <= 0.0) {
      if (apex == left || apex == right || orient(apex, right, L) > 0.0) {
        left = L;
        left_i = i;
      } else {
        path.push_back(right);
        apex = right;
        apex_i = right_i;
        right = left = apex;
        right_i = left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  if (!(path.back() == b.point)) path.push_back(b.point);

  GeodesicPath out;
  out.waypoints.reserve(path.size());
  for (const Point& p : path) {
    if (out.waypoints.empty() || !(out.waypoints.back() == p)) out.waypoints.push_back(p);
  }
  for (std::size_t k = 1; k < out.waypoints.size(); ++k) {
    out.length += sweepcost::distance(out.waypoints[k - 1], out.waypoints[k]);
  }
  return out;
}

GeodesicPath GeodesicDomain::shortest_path(Point a, Point b) const {
  return shortest_path(locate(a), locate(b));
}

double GeodesicDomain::distance(const Located& a, const Located& b) const {
  return shortest_path(a, b).length;
}

double GeodesicDomain::distance(Point a, Point b) const { return shortest_path(a, b).length; }

GeodesicPath shortest_path(const Polygon& polygon, Point a, Point b) {
  return GeodesicDomain(polygon).shortest_path(a, b);
}

double geodesic_distance(const Polygon& polygon, Point a, Point b) {
  return GeodesicDomain(polygon).distance(a, b);
}

double curve_distance(const GeodesicDomain& domain, const BoundaryTrajectory& alpha,
                      const BoundaryTrajectory& beta) {
  if (alpha.size() != beta.size()) {
    throw GridMismatch("trajectories have " + std::to_string(alpha.size()) + " and " +
                       std::to_string(beta.size()) + " samples");
  }
  const Polygon& polygon = domain.polygon();
  double worst = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    worst = std::max(worst, domain.distance(polygon.point_at_lift(alpha.lift(k)),
                                            polygon.point_at_lift(beta.lift(k))));
  }
  return worst;
}

double curve_distance(const Polygon& polygon, const BoundaryTrajectory& alpha,
                      const BoundaryTrajectory& beta) {
  return curve_distance(GeodesicDomain(polygon), alpha, beta);
}

}  // namespace sweepcost
