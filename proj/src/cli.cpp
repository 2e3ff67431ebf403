#include "sweepcost/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sweepcost/convex.hpp"
#include "sweepcost/io.hpp"
#include "sweepcost/simulator.hpp"
#include "sweepcost/solver.hpp"

namespace sweepcost::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kRefineLevels = 3;
constexpr std::size_t kSvgFrames = 9;

struct VerificationFailed {};

void write_report(const RunConfig& config, const json& report) {
  std::filesystem::create_directories(config.out);
  io::write_text_file(config.out / (config.command + ".json"), report.dump(2) + "\n");
}

json base_report(const RunConfig& config, const Polygon& polygon) {
  json r;
  r["command"] = config.command;
  r["input"] = config.input.string();
  r["vertices"] = polygon.size();
  r["area"] = polygon.area();
  r["perimeter"] = polygon.perimeter();
  r["convex"] = polygon.is_convex();
  return r;
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions opts;
  opts.strict = config.strict;
  return opts;
}

int cmd_validate(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  out << "valid: true\n"
      << "vertices: " << polygon.size() << "\n"
      << "area: " << io::fmt9(polygon.area()) << "\n"
      << "perimeter: " << io::fmt9(polygon.perimeter()) << "\n"
      << "convex: " << (polygon.is_convex() ? "true" : "false") << "\n";
  json r = base_report(config, polygon);
  r["valid"] = true;
  write_report(config, r);
  return kOk;
}

int cmd_width(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  const WidthResult w = width(polygon);
  out << io::fmt9(w.width) << "\n";
  json r = base_report(config, polygon);
  r["width"] = w.width;
  r["direction"] = {w.direction.x, w.direction.y};
  r["support_vertex"] = w.vertex;
  r["support_edge"] = w.edge;
  write_report(config, r);
  return kOk;
}

int cmd_sweep_cost(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  const BoundarySampling sampling = sample_boundary(polygon, config.samples);
  const SweepCostResult result = solve(polygon, sampling, solve_options(config));

  out << "sweep_cost: " << io::fmt9(result.value) << "\n"
      << "error_bound: " << io::fmt9(result.error_bound) << " (2h reporting convention)\n"
      << "samples: " << result.samples << "\n"
      << "winding: " << result.winding << "\n"
      << "mode: " << (config.strict ? "strict" : "weak") << "\n";
  json r = base_report(config, polygon);
  r["mode"] = config.strict ? "strict" : "weak";
  r["samples"] = result.samples;
  r["value"] = result.value;
  r["error_bound"] = result.error_bound;
  r["winding"] = result.winding;
  if (polygon.is_convex()) {
    const double w = width(polygon).width;
    out << "width: " << io::fmt9(w) << "\n"
        << "relative_deviation: " << io::fmt9(std::abs(result.value - w) / w) << "\n";
    r["width"] = w;
    r["relative_deviation"] = std::abs(result.value - w) / w;
  }
  write_report(config, r);
  io::write_text_file(config.out / "plan.json", io::format_plan(io::plan_from_result(result)));
  out << "plan: " << (config.out / "plan.json").string() << "\n";
  return kOk;
}

int cmd_lower_bound(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  const BisectingChord chord = shortest_bisecting_chord(polygon);
  out << "lower_bound: " << io::fmt9(chord.length) << "\n"
      << "chord: (" << io::fmt9(chord.a.x) << ", " << io::fmt9(chord.a.y) << ") - (" << io::fmt9(chord.b.x)
      << ", " << io::fmt9(chord.b.y) << ")\n";
  json r = base_report(config, polygon);
  r["lower_bound"] = chord.length;
  r["chord"] = {{chord.a.x, chord.a.y}, {chord.b.x, chord.b.y}};
  write_report(config, r);
  return kOk;
}

int cmd_extremal(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  const SweepCostResult result = solve(polygon, sample_boundary(polygon, config.samples), solve_options(config));
  const ExtremalReport rep = extremal_report(polygon, result.value);
  out << "sweep_cost: " << io::fmt9(result.value) << "\n"
      << "area: " << io::fmt9(rep.area) << "\n"
      << "sc^2/sqrt(3): " << io::fmt9(rep.bound) << "\n"
      << "ratio: " << io::fmt9(rep.ratio) << "\n"
      << "violation: " << (rep.violation ? "true" : "false") << "\n";
  json r = base_report(config, polygon);
  r["sweep_cost"] = result.value;
  r["error_bound"] = result.error_bound;
  r["bound"] = rep.bound;
  r["ratio"] = rep.ratio;
  r["violation"] = rep.violation;
  write_report(config, r);
  return kOk;
}

int cmd_refine(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  const auto table = refine(polygon, config.samples, kRefineLevels, solve_options(config));
  json r = base_report(config, polygon);
  r["levels"] = json::array();
  out << "m samples value error_bound difference\n";
  for (const RefineLevel& row : table) {
    out << row.m << ' ' << row.samples << ' ' << io::fmt9(row.value) << ' ' << io::fmt9(row.error_bound) << ' '
        << io::fmt9(row.difference) << "\n";
    json level;
    level["m"] = row.m;
    level["samples"] = row.samples;
    level["value"] = row.value;
    level["error_bound"] = row.error_bound;
    level["difference"] = row.difference;
    r["levels"].push_back(level);
  }
  write_report(config, r);
  return kOk;
}

int cmd_simulate(const RunConfig& config, const Polygon& polygon, std::ostream& out) {
  io::Plan plan;
  if (!config.plan.empty()) {
    plan = io::read_plan(config.plan);
  } else {
    plan = io::plan_from_result(solve(polygon, sample_boundary(polygon, config.samples), solve_options(config)));
  }
  const GeodesicDomain domain(polygon);
  const BoundaryTrajectory alpha(polygon.perimeter(), plan.alpha);
  const BoundaryTrajectory beta(polygon.perimeter(), plan.beta);
  const SensorFamily family = build_sensor_family(domain, alpha, beta, config.substeps);
  const ContamField field = simulate(domain, family, config.grid);
  const SweepVerdict verdict = verify_sweep(field);

  std::filesystem::create_directories(config.out);
  {
    std::ofstream csv(config.out / "timeseries.csv");
    io::write_csv(csv, family, field);
  }
  const std::size_t steps = field.steps();
  const std::size_t frames = std::min(kSvgFrames, steps);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t step = frames == 1 ? 0 : f * (steps - 1) / (frames - 1);
    char name[32];
    std::snprintf(name, sizeof name, "frame_%05zu.svg", step);
    std::ofstream svg(config.out / name);
    io::write_svg(svg, polygon, family, field, step);
  }

  out << "cleared: " << (verdict.cleared ? "true" : "false") << "\n"
      << "steps: " << steps << "\n"
      << "max_sensor_length: " << io::fmt9(family.max_length) << "\n"
      << "boundary_contacts: " << family.boundary_contacts << "\n";
  if (verdict.half_area_step) {
    out << "half_area_step: " << *verdict.half_area_step << "\n";
  } else {
    out << "half_area_step: none\n";
  }
  json r = base_report(config, polygon);
  r["grid"] = config.grid;
  r["substeps"] = config.substeps;
  r["steps"] = steps;
  r["cleared"] = verdict.cleared;
  r["max_sensor_length"] = family.max_length;
  r["boundary_contacts"] = family.boundary_contacts;
  r["final_contaminated_cells"] = field.contaminated_count(steps - 1);
  if (verdict.half_area_step) {
    r["half_area_step"] = *verdict.half_area_step;
  } else {
    r["half_area_step"] = nullptr;
  }
  write_report(config, r);
  if (!verdict.cleared) throw VerificationFailed{};
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < 8 || config.grid < 64 || config.substeps < 1) {
    err << "error: require --samples >= 8, --grid >= 64, --substeps >= 1\n";
    return kInvalidInput;
  }
  try {
    const Polygon polygon = io::read_polygon(config.input);
    if (config.command == "validate") return cmd_validate(config, polygon, out);
    if (config.command == "width") return cmd_width(config, polygon, out);
    if (config.command == "sweep-cost") return cmd_sweep_cost(config, polygon, out);
    if (config.command == "lower-bound") return cmd_lower_bound(config, polygon, out);
    if (config.command == "simulate") return cmd_simulate(config, polygon, out);
    if (config.command == "extremal-report") return cmd_extremal(config, polygon, out);
    if (config.command == "refine") return cmd_refine(config, polygon, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kInvalidInput;
  } catch (const VerificationFailed&) {
    err << "error: witness did not clear the domain at grid " << config.grid << "\n";
    return kVerificationFailure;
  } catch (const SimplicityViolation& e) {
    err << "error: " << e.what() << " (edge " << e.edge_a() << ", edge " << e.edge_b() << ")\n";
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace sweepcost::cli
