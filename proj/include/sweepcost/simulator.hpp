#pragma once

// Certification of sweeps by rasterized contamination clearing.
//
// A pair of boundary trajectories is turned into a family of geodesic sensor
// frames; the contaminated region is then evolved on a grid: every transition
// sweeps a band of cells, and contamination refills every cell reachable
// (4-connected) from the surviving contaminated cells without crossing the
// band. Bands are 8-connected, so no diagonal leak passes through them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sweepcost/geodesic.hpp"
#include "sweepcost/geometry.hpp"

namespace sweepcost {

struct SensorFamily {
  /// Trajectories refined by linear interpolation of lifts; one frame per sample.
  BoundaryTrajectory alpha;
  BoundaryTrajectory beta;
  std::vector<GeodesicPath> frames;
  double max_length = 0.0;
  /// Frames whose interior touches the boundary (bends at a polygon vertex).
  std::size_t boundary_contacts = 0;

  std::size_t steps() const { return frames.size(); }
};

/// Geodesic frame for every refined time step. Throws GridMismatch or geodesic errors.
SensorFamily build_sensor_family(const GeodesicDomain& domain, const BoundaryTrajectory& alpha,
                                 const BoundaryTrajectory& beta, std::size_t substeps);
SensorFamily build_sensor_family(const Polygon& polygon, const BoundaryTrajectory& alpha,
                                 const BoundaryTrajectory& beta, std::size_t substeps);

enum class CellState : std::uint8_t { Contaminated, Clear, SensorBand, Outside };

struct Cell {
  std::size_t ix = 0;
  std::size_t iy = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class ContamField {
 public:
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double cell_size() const { return cell_; }
  Point origin() const { return origin_; }
  std::size_t steps() const { return contaminated_.size(); }

  Point cell_center(Cell c) const;
  bool in_domain(Cell c) const { return in_domain_[index(c)] != 0; }
  CellState state(std::size_t step, Cell c) const;
  std::size_t contaminated_count(std::size_t step) const { return counts_[step]; }
  std::size_t domain_cells() const { return domain_cells_; }

  /// Uncontaminated area estimate per step: (domain cells - contaminated cells) * cell area.
  const std::vector<double>& u_area() const { return u_area_; }
  double polygon_area() const { return polygon_area_; }

  /// In-domain cell whose center is nearest to p.
  Cell nearest_domain_cell(Point p) const;

 private:
  friend ContamField simulate(const GeodesicDomain& domain, const SensorFamily& family,
                              std::size_t resolution);

  std::size_t index(Cell c) const { return c.iy * nx_ + c.ix; }

  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  double cell_ = 0.0;
  Point origin_;
  double polygon_area_ = 0.0;
  std::size_t domain_cells_ = 0;
  std::vector<char> in_domain_;
  std::vector<std::vector<bool>> contaminated_;
  std::vector<std::vector<bool>> band_;
  std::vector<std::size_t> counts_;
  std::vector<double> u_area_;
};

/// Evolves the contaminated region; `resolution` is the cell count across the longer
/// bounding-box side. Throws ResolutionTooCoarse below 64 or when a swept band is disconnected.
ContamField simulate(const GeodesicDomain& domain, const SensorFamily& family, std::size_t resolution);
ContamField simulate(const Polygon& polygon, const SensorFamily& family, std::size_t resolution);

struct SweepVerdict {
  bool cleared = false;
  /// First step whose uncontaminated area reaches half the polygon area.
  std::optional<std::size_t> half_area_step;
};

SweepVerdict verify_sweep(const ContamField& field);

/// Boundary evader for endpoint trajectories that never wind fully around each other.
/// Returns nullopt when the sensors clear the whole boundary at some time.
/// Throws EndpointMismatch when alpha(0) != beta(0), GridMismatch on different grids.
std::optional<BoundaryTrajectory> evasion_path(const Polygon& polygon, const BoundaryTrajectory& alpha,
                                               const BoundaryTrajectory& beta);

}  // namespace sweepcost
