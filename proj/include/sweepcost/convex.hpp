#pragma once

// Closed-form quantities for convex polygons: the width (which equals the
// sweeping cost of a convex domain), the shortest area-bisecting chord (a
// lower bound on the sweeping cost) and the area / cost extremal ratio.

#include <cstddef>

#include "sweepcost/geometry.hpp"

namespace sweepcost {

struct WidthResult {
  double width = 0.0;
  /// Unit normal of the supporting lines, pointing from the edge into the polygon.
  Point direction;
  /// Vertex touching the far supporting line.
  std::size_t vertex = 0;
  /// Edge (from vertex `edge` to `edge + 1`) lying on the near supporting line.
  std::size_t edge = 0;
};

/// Rotating calipers over antipodal vertex-edge pairs, O(n). Throws NotConvex.
WidthResult width(const Polygon& polygon);

struct BisectingChord {
  Point a;
  Point b;
  double s_a = 0.0;  ///< arclength of a
  double s_b = 0.0;  ///< arclength of b
  double length = 0.0;
};

struct BisectorOptions {
  std::size_t anchors = 1024;
  int polish_iterations = 80;
};

/// Shortest straight chord splitting the area in half. Throws NotConvex or ConvergenceFailure.
BisectingChord shortest_bisecting_chord(const Polygon& polygon, const BisectorOptions& options = {});

/// Twice the area enclosed by the boundary arc from arclength s to s_end
/// (s < s_end <= s + perimeter, counterclockwise) and the closing chord.
double arc_region_twice_area(const Polygon& polygon, double s, double s_end);

struct ExtremalReport {
  double area = 0.0;
  double bound = 0.0;  ///< sc^2 / sqrt(3)
  double ratio = 0.0;  ///< area * sqrt(3) / sc^2
  bool convex = false;
  bool violation = false;  ///< convex and ratio < 1 - 1e-3
};

ExtremalReport extremal_report(const Polygon& polygon, double sc);

}  // namespace sweepcost
