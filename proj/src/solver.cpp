#include "sweepcost/solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <thread>
#include <tuple>

namespace sweepcost {

double BoundarySampling::gap(std::size_t i) const {
  const std::size_t n = positions.size();
  return i + 1 < n ? positions[i + 1] - positions[i] : positions[0] + perimeter - positions[n - 1];
}

BoundarySampling sample_boundary(const Polygon& polygon, std::size_t m) {
  if (m == 0) throw DegenerateInput("sample count must be positive");
  const double perimeter = polygon.perimeter();
  const double tol = polygon.tolerance();

  std::vector<double> vertex_s(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) vertex_s[i] = polygon.vertex_arclength(i);

  std::vector<double> merged;
  merged.reserve(m + polygon.size());
  for (std::size_t k = 0; k < m; ++k) {
    const double s = perimeter * static_cast<double>(k) / static_cast<double>(m);
    const bool near_vertex = std::any_of(vertex_s.begin(), vertex_s.end(), [&](double vs) {
      return circular_distance(s, vs, perimeter) <= tol;
    });
    if (!near_vertex) merged.push_back(s);
  }
  merged.insert(merged.end(), vertex_s.begin(), vertex_s.end());
  std::sort(merged.begin(), merged.end());

  BoundarySampling out;
  out.perimeter = perimeter;
  for (double s : merged) {
    if (!out.positions.empty() && s - out.positions.back() <= tol) continue;
    out.positions.push_back(s);
  }
  if (out.positions.size() > 1 && perimeter - out.positions.back() + out.positions.front() <= tol) {
    out.positions.pop_back();
  }
  for (std::size_t i = 0; i < out.count(); ++i) out.max_gap = std::max(out.max_gap, out.gap(i));
  return out;
}

DistanceMatrix distance_matrix(const GeodesicDomain& domain, const BoundarySampling& sampling,
                               unsigned threads) {
  const std::size_t n = sampling.count();
  const Polygon& polygon = domain.polygon();
  std::vector<GeodesicDomain::Located> located;
  located.reserve(n);
  for (double s : sampling.positions) located.push_back(domain.locate(polygon.boundary_point(s)));

  DistanceMatrix out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  // Rows are interleaved across workers; each worker writes only the upper
  // triangle entries of its own rows.
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < n; i += threads) {
      for (std::size_t j = i + 1; j < n; ++j) out(i, j) = domain.distance(located[i], located[j]);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out(j, i) = out(i, j);
  }
  return out;
}

DistanceMatrix distance_matrix(const Polygon& polygon, const BoundarySampling& sampling,
                               unsigned threads) {
  return distance_matrix(GeodesicDomain(polygon), sampling, threads);
}

double nominal_state_count(std::size_t samples) {
  const double m = static_cast<double>(samples);
  return (2.0 * m + 1.0) * m * m;
}

namespace {

// Reachable states satisfy delta == i - j (mod m), so each (i, j) cell carries
// at most three deltas: r - m, r and (only when r == 0) m, with r = (i - j) mod m.
class StateSpace {
 public:
  explicit StateSpace(std::size_t m) : m_(static_cast<long>(m)) {}

  std::size_t size() const { return static_cast<std::size_t>(3 * m_ * m_); }

  std::size_t encode(long i, long j, long delta) const {
    const long r = ((i - j) % m_ + m_) % m_;
    const long k = (delta - r) / m_ + 1;
    return static_cast<std::size_t>((i * m_ + j) * 3 + k);
  }

  std::tuple<long, long, long> decode(std::size_t state) const {
    const long s = static_cast<long>(state);
    const long k = s % 3;
    const long cell = s / 3;
    const long i = cell / m_;
    const long j = cell % m_;
    const long r = ((i - j) % m_ + m_) % m_;
    return {i, j, r + (k - 1) * m_};
  }

  long m() const { return m_; }

 private:
  long m_;
};

struct Label {
  double bottleneck = std::numeric_limits<double>::infinity();
  std::uint32_t moves = std::numeric_limits<std::uint32_t>::max();
};

struct Search {
  double value = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> walk;
};

// alpha_dir / beta_dir restrict each token to one direction (+1 / -1); 0 allows both.
Search bottleneck_search(const StateSpace& space, const DistanceMatrix& g, int alpha_dir, int beta_dir) {
  const long m = space.m();
  const std::size_t count = space.size();
  std::vector<Label> label(count);
  std::vector<std::int64_t> parent(count, -1);

  using Entry = std::tuple<double, std::uint32_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  for (long s = 0; s < m; ++s) {
    const std::size_t state = space.encode(s, s, 0);
    label[state] = {g(s, s), 0};
    open.emplace(g(s, s), 0, state);
  }

  struct Move {
    int di, dj, dd, token, dir;
  };
  static constexpr std::array<Move, 4> kMoves{{
      {+1, 0, +1, 0, +1},
      {-1, 0, -1, 0, -1},
      {0, +1, -1, 1, +1},
      {0, -1, +1, 1, -1},
  }};

  while (!open.empty()) {
    const auto [bottleneck, moves, state] = open.top();
    open.pop();
    const Label& cur = label[state];
    if (bottleneck != cur.bottleneck || moves != cur.moves) continue;

    const auto [i, j, delta] = space.decode(state);
    if (i == j && (delta == m || delta == -m)) {
      Search out;
      out.value = bottleneck;
      for (std::int64_t w = static_cast<std::int64_t>(state); w != -1; w = parent[w]) {
        out.walk.push_back(static_cast<std::size_t>(w));
      }
      std::reverse(out.walk.begin(), out.walk.end());
      return out;
    }

    for (const Move& mv : kMoves) {
      const int allowed = mv.token == 0 ? alpha_dir : beta_dir;
      if (allowed != 0 && allowed != mv.dir) continue;
      const long nd = delta + mv.dd;
      if (nd > m || nd < -m) continue;
      const long ni = (i + mv.di + m) % m;
      const long nj = (j + mv.dj + m) % m;
      const std::size_t next = space.encode(ni, nj, nd);
      const double nb = std::max(bottleneck, g(ni, nj));
      const std::uint32_t nm = moves + 1;
      Label& lab = label[next];
      if (nb < lab.bottleneck || (nb == lab.bottleneck && nm < lab.moves) ||
          (nb == lab.bottleneck && nm == lab.moves && parent[next] >= 0 &&
           static_cast<std::int64_t>(state) < parent[next])) {
        lab = {nb, nm};
        parent[next] = static_cast<std::int64_t>(state);
        open.emplace(nb, nm, next);
      }
    }
  }
  return {};
}

}  // namespace

SweepCostResult solve(const BoundarySampling& sampling, const DistanceMatrix& distances,
                      const SolveOptions& options) {
  const std::size_t n = sampling.count();
  if (n < 3) throw DegenerateInput("solver needs at least 3 boundary samples");
  if (distances.size() != n) throw GridMismatch("distance matrix does not match the sampling");
  if (nominal_state_count(n) > options.max_states) {
    throw ResourceLimit("state space (2m'+1)m'^2 = " + std::to_string(nominal_state_count(n)) +
                        " exceeds the cap " + std::to_string(options.max_states));
  }

  const StateSpace space(n);
  Search best;
  if (options.strict) {
    for (int da : {+1, -1}) {
      for (int db : {+1, -1}) {
        Search s = bottleneck_search(space, distances, da, db);
        if (!s.walk.empty() && s.value < best.value) best = std::move(s);
      }
    }
  } else {
    best = bottleneck_search(space, distances, 0, 0);
  }
  if (best.walk.empty()) throw NoPath("no winding walk exists in the state graph");

  // Lifts are sample positions plus whole turns, so they reproduce the sample
  // points exactly when reduced mod the perimeter.
  const double perimeter = sampling.perimeter;
  std::vector<double> alpha, beta;
  alpha.reserve(best.walk.size());
  beta.reserve(best.walk.size());
  long alpha_turns = 0, beta_turns = 0;
  long prev_i = -1, prev_j = -1;
  long last_delta = 0;
  for (std::size_t state : best.walk) {
    const auto [i, j, delta] = space.decode(state);
    if (prev_i >= 0) {
      if (prev_i == static_cast<long>(n) - 1 && i == 0) ++alpha_turns;
      if (prev_i == 0 && i == static_cast<long>(n) - 1) --alpha_turns;
      if (prev_j == static_cast<long>(n) - 1 && j == 0) ++beta_turns;
      if (prev_j == 0 && j == static_cast<long>(n) - 1) --beta_turns;
    }
    alpha.push_back(sampling.positions[i] + static_cast<double>(alpha_turns) * perimeter);
    beta.push_back(sampling.positions[j] + static_cast<double>(beta_turns) * perimeter);
    prev_i = i;
    prev_j = j;
    last_delta = delta;
  }

  SweepCostResult out;
  out.value = best.value;
  out.alpha = BoundaryTrajectory(perimeter, std::move(alpha));
  out.beta = BoundaryTrajectory(perimeter, std::move(beta));
  out.winding = last_delta > 0 ? 1 : -1;
  out.error_bound = 2.0 * sampling.max_gap;
  out.samples = n;
  out.moves = best.walk.size() - 1;
  return out;
}

SweepCostResult solve(const Polygon& polygon, const BoundarySampling& sampling,
                      const SolveOptions& options) {
  if (nominal_state_count(sampling.count()) > options.max_states) {
    throw ResourceLimit("state space (2m'+1)m'^2 = " + std::to_string(nominal_state_count(sampling.count())) +
                        " exceeds the cap " + std::to_string(options.max_states));
  }
  return solve(sampling, distance_matrix(polygon, sampling, options.threads), options);
}

std::vector<RefineLevel> refine(const Polygon& polygon, std::size_t m0, std::size_t levels,
                                const SolveOptions& options) {
  if (m0 < 8) throw DegenerateInput("refine needs m0 >= 8");
  if (levels < 2) throw DegenerateInput("refine needs at least 2 levels");
  const GeodesicDomain domain(polygon);
  std::vector<RefineLevel> table;
  std::size_t m = m0;
  for (std::size_t level = 0; level < levels; ++level, m *= 2) {
    const BoundarySampling sampling = sample_boundary(polygon, m);
    if (nominal_state_count(sampling.count()) > options.max_states) {
      throw ResourceLimit("refinement level m=" + std::to_string(m) + " exceeds the state cap");
    }
    const SweepCostResult r = solve(sampling, distance_matrix(domain, sampling, options.threads), options);
    RefineLevel row{m, sampling.count(), r.value, r.error_bound, 0.0};
    if (!table.empty()) row.difference = r.value - table.back().value;
    table.push_back(row);
  }
  return table;
}

}  // namespace sweepcost
