#include <iostream>

#include <CLI11.hpp>

#include "sweepcost/cli.hpp"

int main(int argc, char** argv) {
  sweepcost::cli::RunConfig config;
  CLI::App app{"Sweeping cost of simple polygonal domains"};
  app.require_subcommand(1);

  const char* commands[][2] = {
      {"validate", "Validate a polygon JSON file"},
      {"width", "Width of a convex polygon (rotating calipers)"},
      {"sweep-cost", "Discrete sweeping cost and witness plan"},
      {"lower-bound", "Shortest area-bisecting chord of a convex polygon"},
      {"simulate", "Certify a plan by contamination-clearing simulation"},
      {"extremal-report", "Area versus sweeping-cost ratio"},
      {"refine", "Convergence table over doubling sample counts"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", config.input, "Polygon JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--samples", config.samples, "Uniform boundary samples m (>= 8)");
    sub->add_option("--grid", config.grid, "Raster cells across the bounding box (>= 64)");
    sub->add_option("--substeps", config.substeps, "Time substeps per witness move (>= 1)");
    sub->add_option("--plan", config.plan, "Plan JSON produced by sweep-cost");
    sub->add_option("--out", config.out, "Output directory for reports and artifacts");
    sub->add_flag("--strict", config.strict, "Forbid backtracking (monotone lifts)");
    sub->callback([&config, sub] { config.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sweepcost::cli::kInvalidInput;
  }
  return sweepcost::cli::run(config, std::cout, std::cerr);
}
