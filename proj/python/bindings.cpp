#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sweepcost/convex.hpp"
#include "sweepcost/geodesic.hpp"
#include "sweepcost/simulator.hpp"
#include "sweepcost/solver.hpp"

namespace py = pybind11;
using namespace sweepcost;

namespace {

using Vertices = std::vector<std::pair<double, double>>;

Polygon to_polygon(const Vertices& v) {
  std::vector<Point> pts;
  pts.reserve(v.size());
  for (const auto& [x, y] : v) pts.push_back({x, y});
  return validate_polygon(pts);
}

std::pair<double, double> tuple(Point p) { return {p.x, p.y}; }

py::dict sweep_cost(const Vertices& vertices, std::size_t samples, bool strict) {
  const Polygon polygon = to_polygon(vertices);
  SolveOptions options;
  options.strict = strict;
  const SweepCostResult r = solve(polygon, sample_boundary(polygon, samples), options);
  py::dict d;
  d["value"] = r.value;
  d["winding"] = r.winding;
  d["error_bound"] = r.error_bound;
  d["samples"] = r.samples;
  d["alpha"] = r.alpha.lifts();
  d["beta"] = r.beta.lifts();
  return d;
}

py::dict simulate_plan(const Vertices& vertices, const std::vector<double>& alpha, const std::vector<double>& beta,
                       std::size_t grid, std::size_t substeps) {
  const Polygon polygon = to_polygon(vertices);
  const GeodesicDomain domain(polygon);
  const SensorFamily family = build_sensor_family(domain, BoundaryTrajectory(polygon.perimeter(), alpha),
                                                  BoundaryTrajectory(polygon.perimeter(), beta), substeps);
  const ContamField field = simulate(domain, family, grid);
  const SweepVerdict verdict = verify_sweep(field);
  py::dict d;
  d["cleared"] = verdict.cleared;
  d["half_area_step"] = verdict.half_area_step ? py::cast(*verdict.half_area_step) : py::none();
  d["u_area"] = field.u_area();
  d["max_length"] = family.max_length;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sweeping cost of simple polygons";

  py::register_exception<Error>(m, "SweepcostError", PyExc_ValueError);

  m.def("area", [](const Vertices& v) { return to_polygon(v).area(); }, py::arg("vertices"));
  m.def("perimeter", [](const Vertices& v) { return to_polygon(v).perimeter(); }, py::arg("vertices"));
  m.def("is_convex", [](const Vertices& v) { return to_polygon(v).is_convex(); }, py::arg("vertices"));
  m.def(
      "width", [](const Vertices& v) { return width(to_polygon(v)).width; }, py::arg("vertices"),
      "Minimum distance between parallel supporting lines of a convex polygon.");
  m.def(
      "bisecting_chord",
      [](const Vertices& v) {
        const BisectingChord c = shortest_bisecting_chord(to_polygon(v));
        return py::make_tuple(c.length, tuple(c.a), tuple(c.b));
      },
      py::arg("vertices"), "Shortest area-bisecting chord as (length, a, b).");
  m.def(
      "geodesic_distance",
      [](const Vertices& v, std::pair<double, double> a, std::pair<double, double> b) {
        return geodesic_distance(to_polygon(v), {a.first, a.second}, {b.first, b.second});
      },
      py::arg("vertices"), py::arg("a"), py::arg("b"));
  m.def(
      "shortest_path",
      [](const Vertices& v, std::pair<double, double> a, std::pair<double, double> b) {
        const GeodesicPath p = shortest_path(to_polygon(v), {a.first, a.second}, {b.first, b.second});
        Vertices out;
        for (const Point& w : p.waypoints) out.push_back(tuple(w));
        return out;
      },
      py::arg("vertices"), py::arg("a"), py::arg("b"));
  m.def("sweep_cost", &sweep_cost, py::arg("vertices"), py::arg("samples") = 128, py::arg("strict") = false);
  m.def("simulate", &simulate_plan, py::arg("vertices"), py::arg("alpha"), py::arg("beta"), py::arg("grid") = 256,
        py::arg("substeps") = 4);
}
