#pragma once

// Planar primitives for simple polygonal domains: validation, area,
// arclength parametrization of the boundary, point location and winding
// numbers of boundary loops.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "sweepcost/errors.hpp"

namespace sweepcost {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
  friend Point operator*(Point a, double k) { return {k * a.x, k * a.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

/// Twice the signed area of triangle (a, b, c); positive when c lies left of a->b.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// Euclidean distance from p to the closed segment [a, b].
double segment_distance(Point p, Point a, Point b);

/// Closest point to p on the closed segment [a, b].
Point segment_projection(Point p, Point a, Point b);

/// A simple polygon with counterclockwise vertex order.
///
/// Instances are only produced by validate_polygon(), so every Polygon
/// satisfies: at least three vertices, no repeated consecutive vertex,
/// edges meeting only at shared endpoints, and positive signed area.
class Polygon {
 public:
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }

  double perimeter() const { return cumulative_.back(); }
  bool is_convex() const { return convex_; }
  double area() const { return area_; }

  /// Coincidence tolerance: 1e-9 times the bounding-box diagonal.
  double tolerance() const { return tolerance_; }
  double bbox_diagonal() const { return diagonal_; }
  Point bbox_min() const { return lo_; }
  Point bbox_max() const { return hi_; }

  /// Arclength of vertex i measured counterclockwise from vertex 0.
  double vertex_arclength(std::size_t i) const { return cumulative_[i]; }
  double edge_length(std::size_t i) const { return cumulative_[i + 1] - cumulative_[i]; }

  /// Boundary point at arclength s in [0, perimeter).
  Point boundary_point(double s) const;

  /// Boundary point at an arbitrary lifted arclength (taken mod perimeter).
  Point point_at_lift(double lift) const;

  /// Index of the edge containing arclength s (s in [0, perimeter)).
  std::size_t edge_at(double s) const;

  /// Arclength of the boundary point nearest to p.
  double project_to_boundary(Point p) const;

  /// Distance from p to the polygon boundary.
  double boundary_distance(Point p) const;

 private:
  friend Polygon validate_polygon(std::span<const Point> vertices);
  Polygon() = default;

  std::vector<Point> vertices_;
  std::vector<double> cumulative_;  // size n + 1, cumulative_[n] == perimeter
  double area_ = 0.0;
  double tolerance_ = 0.0;
  double diagonal_ = 0.0;
  Point lo_;
  Point hi_;
  bool convex_ = false;
};

/// Validates a vertex list and returns it as a counterclockwise Polygon.
/// Clockwise input is reversed. Throws DegenerateInput or SimplicityViolation.
Polygon validate_polygon(std::span<const Point> vertices);

/// Shoelace area (positive by the CCW invariant).
double polygon_area(const Polygon& polygon);

/// Point on the boundary at arclength s; throws OutOfRange outside [0, perimeter).
Point boundary_point(const Polygon& polygon, double s);

enum class Location { Interior, Boundary, Exterior };

/// Classifies x, treating points within tol of the boundary as Boundary.
Location point_in_domain(const Polygon& polygon, Point x, double tol);

/// A point on the boundary with its lift to the universal cover.
struct BoundaryPos {
  double s = 0.0;     // in [0, perimeter)
  double lift = 0.0;  // lift == s (mod perimeter)

  static BoundaryPos from_lift(double lift, double perimeter);
};

/// Lifted arclength samples of a boundary curve on a uniform time grid of [0, 1].
class BoundaryTrajectory {
 public:
  BoundaryTrajectory() = default;

  /// Throws DegenerateInput if consecutive lifts jump by perimeter/2 or more.
  BoundaryTrajectory(double perimeter, std::vector<double> lifts);

  double perimeter() const { return perimeter_; }
  std::size_t size() const { return lifts_.size(); }
  bool empty() const { return lifts_.empty(); }
  const std::vector<double>& lifts() const { return lifts_; }
  double lift(std::size_t k) const { return lifts_[k]; }
  BoundaryPos at(std::size_t k) const { return BoundaryPos::from_lift(lifts_[k], perimeter_); }
  double time(std::size_t k) const {
    return lifts_.size() < 2 ? 0.0 : static_cast<double>(k) / static_cast<double>(lifts_.size() - 1);
  }

 private:
  double perimeter_ = 0.0;
  std::vector<double> lifts_;
};

/// Winding number of the loop alpha * beta^{-1}, computed from lifts.
/// Throws EndpointMismatch unless alpha and beta share start and end points.
int winding_number(const BoundaryTrajectory& alpha, const BoundaryTrajectory& beta);

/// Circular arclength distance between two boundary coordinates.
double circular_distance(double s1, double s2, double perimeter);

}  // namespace sweepcost
