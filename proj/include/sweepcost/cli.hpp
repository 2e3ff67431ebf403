#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace sweepcost::cli {

struct RunConfig {
  std::string command;  ///< validate | width | sweep-cost | lower-bound | simulate | extremal-report | refine
  std::filesystem::path input;
  std::size_t samples = 128;
  std::size_t grid = 256;
  std::size_t substeps = 4;
  std::filesystem::path plan;  ///< optional plan JSON for `simulate`
  std::filesystem::path out = "sweepcost_out";
  bool strict = false;
};

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kResourceLimit = 2,
  kVerificationFailure = 3,
};

/// Runs one command. Human-readable lines go to `out`, diagnostics to `err`;
/// a JSON report (and per-command artifacts) is written into config.out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sweepcost::cli
