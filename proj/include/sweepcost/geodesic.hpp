#pragma once

// Intrinsic (geodesic) metric inside a simple polygon.
//
// One ear-clipping triangulation is built per domain; each shortest-path
// query walks the sleeve of triangles between the two endpoints in the dual
// tree and pulls the path taut with the funnel algorithm.

#include <array>
#include <cstddef>
#include <vector>

#include "sweepcost/geometry.hpp"

namespace sweepcost {

struct Triangulation {
  /// Vertex-index triples in counterclockwise order.
  std::vector<std::array<std::size_t, 3>> triangles;
  /// neighbors[t][k] is the triangle across the edge opposite corner k, or -1 on the boundary.
  std::vector<std::array<int, 3>> neighbors;
};

/// Ear-clipping triangulation with n - 2 triangles. Throws DegenerateInput if no ear can be found.
Triangulation triangulate(const Polygon& polygon);

struct GeodesicPath {
  std::vector<Point> waypoints;
  double length = 0.0;
};

/// A polygon together with its triangulation; answers geodesic queries.
/// Immutable after construction, so concurrent queries are safe.
class GeodesicDomain {
 public:
  explicit GeodesicDomain(Polygon polygon);

  /// A query point snapped into the domain with the triangles that contain it.
  struct Located {
    Point point;
    std::vector<int> triangles;
  };

  const Polygon& polygon() const { return polygon_; }
  const Triangulation& triangulation() const { return triangulation_; }

  /// Throws PointOutsideDomain if p is farther than the tolerance outside the polygon.
  Located locate(Point p) const;

  GeodesicPath shortest_path(const Located& a, const Located& b) const;
  GeodesicPath shortest_path(Point a, Point b) const;
  double distance(const Located& a, const Located& b) const;
  double distance(Point a, Point b) const;

 private:
  std::vector<int> sleeve(const Located& a, const Located& b) const;

  Polygon polygon_;
  Triangulation triangulation_;
};

GeodesicPath shortest_path(const Polygon& polygon, Point a, Point b);

double geodesic_distance(const Polygon& polygon, Point a, Point b);

/// Maximum over the shared time grid of the geodesic distance between alpha(t) and beta(t).
/// Throws GridMismatch when the trajectories have different lengths.
double curve_distance(const Polygon& polygon, const BoundaryTrajectory& alpha,
                      const BoundaryTrajectory& beta);
double curve_distance(const GeodesicDomain& domain, const BoundaryTrajectory& alpha,
                      const BoundaryTrajectory& beta);

}  // namespace sweepcost
