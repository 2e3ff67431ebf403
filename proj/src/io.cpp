#include "sweepcost/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace sweepcost::io {

using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DegenerateInput("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DegenerateInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw DegenerateInput(std::string("plan JSON needs an array \"") + key + "\"");
  }
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& x : j[key]) {
    if (!x.is_number()) throw DegenerateInput(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

Polygon parse_polygon(const std::string& text) {
  const json j = parse_json(text, "polygon");
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw DegenerateInput("polygon JSON needs a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw DegenerateInput("each vertex must be a [x, y] pair of numbers");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return validate_polygon(pts);
}

Polygon read_polygon(const std::filesystem::path& path) { return parse_polygon(slurp(path)); }

std::string format_polygon(const Polygon& polygon) {
  json j;
  j["vertices"] = json::array();
  for (const Point& p : polygon.vertices()) j["vertices"].push_back({p.x, p.y});
  return j.dump() + "\n";
}

Plan plan_from_result(const SweepCostResult& result) {
  return {result.value, result.winding, result.error_bound, result.alpha.lifts(), result.beta.lifts()};
}

std::string format_plan(const Plan& plan) {
  json j;
  j["value"] = plan.value;
  j["winding"] = plan.winding;
  j["error_bound"] = plan.error_bound;
  j["alpha"] = plan.alpha;
  j["beta"] = plan.beta;
  return j.dump() + "\n";
}

Plan parse_plan(const std::string& text) {
  const json j = parse_json(text, "plan");
  if (!j.is_object()) throw DegenerateInput("plan JSON must be an object");
  Plan plan;
  plan.value = j.value("value", 0.0);
  plan.winding = j.value("winding", 0);
  plan.error_bound = j.value("error_bound", 0.0);
  plan.alpha = number_array(j, "alpha");
  plan.beta = number_array(j, "beta");
  if (plan.alpha.size() != plan.beta.size() || plan.alpha.empty()) {
    throw GridMismatch("plan alpha and beta must be non-empty and of equal length");
  }
  return plan;
}

Plan read_plan(const std::filesystem::path& path) { return parse_plan(slurp(path)); }

std::string fmt9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

void write_csv(std::ostream& out, const SensorFamily& family, const ContamField& field) {
  out << "step,time,u_area,sensor_length,cleared\n";
  const std::size_t steps = field.steps();
  for (std::size_t k = 0; k < steps; ++k) {
    out << k << ',' << fmt9(family.alpha.time(k)) << ',' << fmt9(field.u_area()[k]) << ','
        << fmt9(family.frames[k].length) << ',' << (field.contaminated_count(k) == 0 ? 1 : 0) << '\n';
  }
}

void write_svg(std::ostream& out, const Polygon& polygon, const SensorFamily& family,
               const ContamField& field, std::size_t step) {
  const double cell = field.cell_size();
  const Point o = field.origin();
  const double w = static_cast<double>(field.nx()) * cell;
  const double h = static_cast<double>(field.ny()) * cell;
  const double scale = 512.0 / std::max(w, h);
  // SVG y grows downwards; flip so the picture matches the plane.
  auto X = [&](double x) { return (x - o.x) * scale; };
  auto Y = [&](double y) { return (h - (y - o.y)) * scale; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt9(w * scale) << "\" height=\""
      << fmt9(h * scale) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g fill=\"#d62728\" fill-opacity=\"0.45\" stroke=\"none\">\n";
  for (std::size_t iy = 0; iy < field.ny(); ++iy) {
    std::size_t ix = 0;
    while (ix < field.nx()) {
      if (field.state(step, {ix, iy}) != CellState::Contaminated) {
        ++ix;
        continue;
      }
      const std::size_t start = ix;
      while (ix < field.nx() && field.state(step, {ix, iy}) == CellState::Contaminated) ++ix;
      const double x0 = o.x + static_cast<double>(start) * cell;
      const double y1 = o.y + static_cast<double>(iy + 1) * cell;
      out << "<rect x=\"" << fmt9(X(x0)) << "\" y=\"" << fmt9(Y(y1)) << "\" width=\""
          << fmt9(static_cast<double>(ix - start) * cell * scale) << "\" height=\"" << fmt9(cell * scale)
          << "\"/>\n";
    }
  }
  out << "</g>\n<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (const Point& p : polygon.vertices()) out << fmt9(X(p.x)) << ',' << fmt9(Y(p.y)) << ' ';
  out << "\"/>\n<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"3\" points=\"";
  for (const Point& p : family.frames[step].waypoints) out << fmt9(X(p.x)) << ',' << fmt9(Y(p.y)) << ' ';
  out << "\"/>\n";
  const Point a = family.frames[step].waypoints.front();
  const Point b = family.frames[step].waypoints.back();
  out << "<circle cx=\"" << fmt9(X(a.x)) << "\" cy=\"" << fmt9(Y(a.y)) << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
  out << "<circle cx=\"" << fmt9(X(b.x)) << "\" cy=\"" << fmt9(Y(b.y)) << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
  out << "</svg>\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DegenerateInput("cannot write " + path.string());
  out << text;
}

}  // namespace sweepcost::io
