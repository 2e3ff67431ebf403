#include "sweepcost/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace sweepcost {

SensorFamily build_sensor_family(const GeodesicDomain& domain, const BoundaryTrajectory& alpha,
                                 const BoundaryTrajectory& beta, std::size_t substeps) {
  if (alpha.size() != beta.size()) throw GridMismatch("alpha and beta use different time grids");
  if (alpha.empty()) throw GridMismatch("empty trajectories");
  substeps = std::max<std::size_t>(substeps, 1);
  const Polygon& polygon = domain.polygon();
  const double perimeter = polygon.perimeter();

  std::vector<double> a, b;
  const std::size_t steps = alpha.size() - 1;
  a.reserve(steps * substeps + 1);
  b.reserve(steps * substeps + 1);
  for (std::size_t k = 0; k < steps; ++k) {
    for (std::size_t q = 0; q < substeps; ++q) {
      const double t = static_cast<double>(q) / static_cast<double>(substeps);
      a.push_back((1.0 - t) * alpha.lift(k) + t * alpha.lift(k + 1));
      b.push_back((1.0 - t) * beta.lift(k) + t * beta.lift(k + 1));
    }
  }
  a.push_back(alpha.lifts().back());
  b.push_back(beta.lifts().back());

  SensorFamily family;
  family.alpha = BoundaryTrajectory(perimeter, std::move(a));
  family.beta = BoundaryTrajectory(perimeter, std::move(b));
  family.frames.reserve(family.alpha.size());
  const auto& verts = polygon.vertices();
  for (std::size_t k = 0; k < family.alpha.size(); ++k) {
    GeodesicPath frame = domain.shortest_path(polygon.point_at_lift(family.alpha.lift(k)),
                                              polygon.point_at_lift(family.beta.lift(k)));
    family.max_length = std::max(family.max_length, frame.length);
    for (std::size_t w = 1; w + 1 < frame.waypoints.size(); ++w) {
      if (std::find(verts.begin(), verts.end(), frame.waypoints[w]) != verts.end()) {
        ++family.boundary_contacts;
        break;
      }
    }
    family.frames.push_back(std::move(frame));
  }
  return family;
}

SensorFamily build_sensor_family(const Polygon& polygon, const BoundaryTrajectory& alpha,
                                 const BoundaryTrajectory& beta, std::size_t substeps) {
  return build_sensor_family(GeodesicDomain(polygon), alpha, beta, substeps);
}

Point ContamField::cell_center(Cell c) const {
  return {origin_.x + (static_cast<double>(c.ix) + 0.5) * cell_,
          origin_.y + (static_cast<double>(c.iy) + 0.5) * cell_};
}

CellState ContamField::state(std::size_t step, Cell c) const {
  const std::size_t k = index(c);
  if (!in_domain_[k]) return CellState::Outside;
  if (contaminated_[step][k]) return CellState::Contaminated;
  if (band_[step][k]) return CellState::SensorBand;
  return CellState::Clear;
}

Cell ContamField::nearest_domain_cell(Point p) const {
  const long cx = static_cast<long>(std::floor((p.x - origin_.x) / cell_));
  const long cy = static_cast<long>(std::floor((p.y - origin_.y) / cell_));
  Cell best{};
  double best_d = std::numeric_limits<double>::infinity();
  for (long radius = 1; radius <= static_cast<long>(std::max(nx_, ny_)); radius *= 2) {
    for (long y = cy - radius; y <= cy + radius; ++y) {
      for (long x = cx - radius; x <= cx + radius; ++x) {
        if (x < 0 || y < 0 || x >= static_cast<long>(nx_) || y >= static_cast<long>(ny_)) continue;
        const Cell c{static_cast<std::size_t>(x), static_cast<std::size_t>(y)};
        if (!in_domain(c)) continue;
        const double d = distance(cell_center(c), p);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
    }
    if (best_d < std::numeric_limits<double>::infinity()) break;
  }
  return best;
}

namespace {

class Raster {
 public:
  Raster(Point origin, double cell, std::size_t nx, std::size_t ny)
      : origin_(origin), cell_(cell), nx_(nx), ny_(ny) {}

  // Marks cells whose centers lie within `radius` of segment [p, q].
  template <typename Mark>
  void capsule(Point p, Point q, double radius, Mark&& mark) const {
    const double ylo = std::min(p.y, q.y) - radius;
    const double yhi = std::max(p.y, q.y) + radius;
    const long row0 = std::max<long>(0, static_cast<long>(std::ceil((ylo - origin_.y) / cell_ - 0.5)));
    const long row1 = std::min<long>(static_cast<long>(ny_) - 1,
                                     static_cast<long>(std::floor((yhi - origin_.y) / cell_ - 0.5)));
    const Point d = q - p;
    const double len = norm(d);
    for (long row = row0; row <= row1; ++row) {
      const double yc = origin_.y + (static_cast<double>(row) + 0.5) * cell_;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      auto disk = [&](Point c) {
        const double dy = yc - c.y;
        if (std::abs(dy) > radius) return;
        const double w = std::sqrt(radius * radius - dy * dy);
        lo = std::min(lo, c.x - w);
        hi = std::max(hi, c.x + w);
      };
      disk(p);
      disk(q);
      if (len > 0.0) {
        // Slab: 0 <= (x - p).d <= len^2 and |cross(d, x - p)| <= radius * len, linear in x.
        double xl = -std::numeric_limits<double>::infinity();
        double xh = std::numeric_limits<double>::infinity();
        bool empty = false;
        auto clip = [&](double coeff, double constant, double lower, double upper) {
          // lower <= coeff * x + constant <= upper
          if (coeff == 0.0) {
            if (constant < lower || constant > upper) empty = true;
            return;
          }
          double a = (lower - constant) / coeff;
          double b = (upper - constant) / coeff;
          if (a > b) std::swap(a, b);
          xl = std::max(xl, a);
          xh = std::min(xh, b);
        };
        const double ry = yc - p.y;
        clip(d.x, -p.x * d.x + ry * d.y, 0.0, len * len);
        clip(-d.y, d.x * ry + d.y * p.x, -radius * len, radius * len);
        if (!empty && xl <= xh) {
          lo = std::min(lo, xl);
          hi = std::max(hi, xh);
        }
      }
      if (!(lo <= hi)) continue;
      const long c0 = std::max<long>(0, static_cast<long>(std::ceil((lo - origin_.x) / cell_ - 0.5)));
      const long c1 = std::min<long>(static_cast<long>(nx_) - 1,
                                     static_cast<long>(std::floor((hi - origin_.x) / cell_ - 0.5)));
      for (long col = c0; col <= c1; ++col) {
        mark(static_cast<std::size_t>(row) * nx_ + static_cast<std::size_t>(col));
      }
    }
  }

  template <typename Mark>
  void polyline(const std::vector<Point>& pts, double radius, Mark&& mark) const {
    if (pts.size() == 1) {
      capsule(pts[0], pts[0], radius, mark);
      return;
    }
    for (std::size_t k = 1; k < pts.size(); ++k) capsule(pts[k - 1], pts[k], radius, mark);
  }

 private:
  Point origin_;
  double cell_;
  std::size_t nx_;
  std::size_t ny_;
};

}  // namespace

ContamField simulate(const GeodesicDomain& domain, const SensorFamily& family, std::size_t resolution) {
  if (resolution < 64) throw ResolutionTooCoarse("raster needs at least 64 cells across the bounding box");
  if (family.frames.empty()) throw GridMismatch("sensor family has no frames");
  const Polygon& polygon = domain.polygon();

  ContamField field;
  const Point lo = polygon.bbox_min();
  const Point hi = polygon.bbox_max();
  field.cell_ = std::max(hi.x - lo.x, hi.y - lo.y) / static_cast<double>(resolution);
  field.origin_ = lo - Point{field.cell_, field.cell_};
  field.nx_ = static_cast<std::size_t>(std::ceil((hi.x - lo.x) / field.cell_)) + 2;
  field.ny_ = static_cast<std::size_t>(std::ceil((hi.y - lo.y) / field.cell_)) + 2;
  field.polygon_area_ = polygon.area();
  const std::size_t nx = field.nx_;
  const std::size_t ny = field.ny_;
  const std::size_t cells = nx * ny;

  field.in_domain_.assign(cells, 0);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const Point c = field.cell_center({ix, iy});
      if (point_in_domain(polygon, c, polygon.tolerance()) != Location::Exterior) {
        field.in_domain_[iy * nx + ix] = 1;
        ++field.domain_cells_;
      }
    }
  }

  const Raster raster(field.origin_, field.cell_, nx, ny);
  const double radius = 0.5 * std::sqrt(2.0) * field.cell_;
  const double max_motion = 0.25 * field.cell_;
  const double cell_area = field.cell_ * field.cell_;

  auto record = [&](std::vector<bool> contaminated, std::vector<bool> band) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < cells; ++k) count += contaminated[k] ? 1 : 0;
    field.counts_.push_back(count);
    field.u_area_.push_back(static_cast<double>(field.domain_cells_ - count) * cell_area);
    field.contaminated_.push_back(std::move(contaminated));
    field.band_.push_back(std::move(band));
  };

  {
    std::vector<bool> band(cells, false);
    raster.polyline(family.frames[0].waypoints, radius, [&](std::size_t k) { band[k] = true; });
    std::vector<bool> contaminated(cells, false);
    for (std::size_t k = 0; k < cells; ++k) contaminated[k] = field.in_domain_[k] && !band[k];
    record(std::move(contaminated), std::move(band));
  }

  std::vector<std::size_t> touched;
  std::deque<std::size_t> queue;
  for (std::size_t step = 1; step < family.frames.size(); ++step) {
    std::vector<bool> band(cells, false);
    touched.clear();
    auto mark = [&](std::size_t k) {
      if (!band[k]) {
        band[k] = true;
        touched.push_back(k);
      }
    };

    // Sub-sample the transition so endpoints move at most a quarter cell between
    // consecutive intermediate frames.
    const double a0 = family.alpha.lift(step - 1), a1 = family.alpha.lift(step);
    const double b0 = family.beta.lift(step - 1), b1 = family.beta.lift(step);
    const double motion = std::max(std::abs(a1 - a0), std::abs(b1 - b0));
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(motion / max_motion)));
    raster.polyline(family.frames[step - 1].waypoints, radius, mark);
    for (std::size_t q = 1; q < pieces; ++q) {
      const double t = static_cast<double>(q) / static_cast<double>(pieces);
      const Point pa = polygon.point_at_lift((1.0 - t) * a0 + t * a1);
      const Point pb = polygon.point_at_lift((1.0 - t) * b0 + t * b1);
      raster.polyline(domain.shortest_path(pa, pb).waypoints, radius, mark);
    }
    raster.polyline(family.frames[step].waypoints, radius, mark);

    // The swept band must be one 8-connected piece; otherwise it cannot separate.
    {
      std::vector<bool> seen(cells, false);
      std::size_t reached = 0;
      queue.clear();
      queue.push_back(touched.front());
      seen[touched.front()] = true;
      while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        ++reached;
        const long x = static_cast<long>(k % nx), y = static_cast<long>(k / nx);
        for (long dy = -1; dy <= 1; ++dy) {
          for (long dx = -1; dx <= 1; ++dx) {
            const long xx = x + dx, yy = y + dy;
            if (xx < 0 || yy < 0 || xx >= static_cast<long>(nx) || yy >= static_cast<long>(ny)) continue;
            const std::size_t kk = static_cast<std::size_t>(yy) * nx + static_cast<std::size_t>(xx);
            if (band[kk] && !seen[kk]) {
              seen[kk] = true;
              queue.push_back(kk);
            }
          }
        }
      }
      if (reached != touched.size()) {
        throw ResolutionTooCoarse("swept band at step " + std::to_string(step) + " is disconnected");
      }
    }

    // Contamination refills everything 4-reachable from surviving contaminated cells.
    const std::vector<bool>& prev = field.contaminated_.back();
    std::vector<bool> contaminated(cells, false);
    queue.clear();
    for (std::size_t k = 0; k < cells; ++k) {
      if (prev[k] && !band[k]) {
        contaminated[k] = true;
        queue.push_back(k);
      }
    }
    while (!queue.empty()) {
      const std::size_t k = queue.front();
      queue.pop_front();
      const std::size_t x = k % nx, y = k / nx;
      const std::size_t nbrs[4] = {x > 0 ? k - 1 : k, x + 1 < nx ? k + 1 : k, y > 0 ? k - nx : k,
                                   y + 1 < ny ? k + nx : k};
      for (std::size_t kk : nbrs) {
        if (kk == k || contaminated[kk] || band[kk] || !field.in_domain_[kk]) continue;
        contaminated[kk] = true;
        queue.push_back(kk);
      }
    }
    record(std::move(contaminated), std::move(band));
  }
  return field;
}

ContamField simulate(const Polygon& polygon, const SensorFamily& family, std::size_t resolution) {
  return simulate(GeodesicDomain(polygon), family, resolution);
}

SweepVerdict verify_sweep(const ContamField& field) {
  SweepVerdict verdict;
  verdict.cleared = field.steps() > 0 && field.contaminated_count(field.steps() - 1) == 0;
  const auto& u = field.u_area();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] >= 0.5 * field.polygon_area()) {
      verdict.half_area_step = k;
      break;
    }
  }
  return verdict;
}

std::optional<BoundaryTrajectory> evasion_path(const Polygon& polygon, const BoundaryTrajectory& alpha,
                                               const BoundaryTrajectory& beta) {
  if (alpha.size() != beta.size()) throw GridMismatch("alpha and beta use different time grids");
  if (alpha.empty()) throw GridMismatch("empty trajectories");
  const double perimeter = polygon.perimeter();
  const double tol = 1e-9 * perimeter;
  const double start_gap = alpha.lift(0) - beta.lift(0);
  const double turns = std::round(start_gap / perimeter);
  if (std::abs(start_gap - turns * perimeter) > tol) {
    throw EndpointMismatch("alpha(0) and beta(0) differ");
  }
  const double shift = turns * perimeter;

  // While |alpha - beta| < perimeter (in lifts) the cleared part of the boundary
  // is the arc between the sensors; the evader rides the midpoint of the
  // complementary, contaminated arc, i.e. (alpha + beta + perimeter) / 2.
  std::vector<double> evader;
  evader.reserve(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const double a = alpha.lift(k);
    const double b = beta.lift(k) + shift;
    if (std::abs(a - b) >= perimeter - tol) return std::nullopt;
    evader.push_back(0.5 * (a + b + perimeter));
  }
  return BoundaryTrajectory(perimeter, std::move(evader));
}

}  // namespace sweepcost
