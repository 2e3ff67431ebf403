#pragma once

// File formats: polygon JSON, plan JSON, CSV time series and SVG frames.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sweepcost/geometry.hpp"
#include "sweepcost/simulator.hpp"
#include "sweepcost/solver.hpp"

namespace sweepcost::io {

/// Parses `{"vertices": [[x, y], ...]}` and validates the polygon.
Polygon parse_polygon(const std::string& text);
Polygon read_polygon(const std::filesystem::path& path);
std::string format_polygon(const Polygon& polygon);

/// Witness trajectories as lifted arclengths.
struct Plan {
  double value = 0.0;
  int winding = 0;
  double error_bound = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;
};

Plan plan_from_result(const SweepCostResult& result);
std::string format_plan(const Plan& plan);
Plan parse_plan(const std::string& text);
Plan read_plan(const std::filesystem::path& path);

/// Columns: step, time, u_area, sensor_length, cleared.
void write_csv(std::ostream& out, const SensorFamily& family, const ContamField& field);

/// One frame: boundary, contaminated cells (row runs), and the sensor polyline.
void write_svg(std::ostream& out, const Polygon& polygon, const SensorFamily& family,
               const ContamField& field, std::size_t step);

/// Fixed-point formatting with nine decimals, used for all human-readable numbers.
std::string fmt9(double value);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sweepcost::io
