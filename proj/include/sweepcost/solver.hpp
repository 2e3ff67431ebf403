#pragma once

// Discrete sweeping-cost solver.
//
// The boundary is sampled at m' points. Two tokens (alpha, beta) walk the
// samples one step at a time; a state is (i, j, delta) with delta the lift of
// alpha minus the lift of beta, counted in sample steps. The sweeping cost is
// the smallest bottleneck geodesic distance over walks from a common start
// (i == j, delta == 0) to a common end that has wound once around the
// boundary (i == j, |delta| == m').

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sweepcost/geodesic.hpp"
#include "sweepcost/geometry.hpp"

namespace sweepcost {

struct BoundarySampling {
  double perimeter = 0.0;
  std::vector<double> positions;  ///< sorted arclengths in [0, perimeter)
  double max_gap = 0.0;           ///< largest circular gap between consecutive samples

  std::size_t count() const { return positions.size(); }
  /// Arclength from sample i to sample i + 1 (circularly).
  double gap(std::size_t i) const;
};

/// Uniform grid of m arclengths merged with every vertex arclength; points within
/// the polygon tolerance of each other are merged (vertex positions win).
BoundarySampling sample_boundary(const Polygon& polygon, std::size_t m);

/// Dense symmetric matrix of geodesic distances between boundary samples.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Pairwise geodesic distances; rows are split across `threads` workers (0 = hardware concurrency).
DistanceMatrix distance_matrix(const GeodesicDomain& domain, const BoundarySampling& sampling,
                               unsigned threads = 0);
DistanceMatrix distance_matrix(const Polygon& polygon, const BoundarySampling& sampling,
                               unsigned threads = 0);

struct SolveOptions {
  /// Forbid backtracking: each token keeps one direction for the whole walk.
  bool strict = false;
  /// Cap on the nominal state count (2m' + 1) * m'^2.
  double max_states = 1e9;
  unsigned threads = 0;
};

struct SweepCostResult {
  double value = 0.0;
  BoundaryTrajectory alpha;
  BoundaryTrajectory beta;
  int winding = 0;
  /// Reporting convention 2h (h = sampling max gap), not a proven sharp bound.
  double error_bound = 0.0;
  std::size_t samples = 0;
  std::size_t moves = 0;
};

/// Nominal size of the (i, j, delta) state space.
double nominal_state_count(std::size_t samples);

/// Bottleneck best-first search over the state graph. Throws ResourceLimit or NoPath.
SweepCostResult solve(const BoundarySampling& sampling, const DistanceMatrix& distances,
                      const SolveOptions& options = {});
SweepCostResult solve(const Polygon& polygon, const BoundarySampling& sampling,
                      const SolveOptions& options = {});

struct RefineLevel {
  std::size_t m = 0;        ///< requested uniform samples
  std::size_t samples = 0;  ///< m' after vertex insertion
  double value = 0.0;
  double error_bound = 0.0;
  double difference = 0.0;  ///< value minus the previous level's value (0 on the first level)
};

/// Solves at m0, 2 m0, 4 m0, ... for `levels` levels. Throws ResourceLimit before any
/// level whose nominal state count exceeds options.max_states.
std::vector<RefineLevel> refine(const Polygon& polygon, std::size_t m0, std::size_t levels,
                                const SolveOptions& options = {});

}  // namespace sweepcost
