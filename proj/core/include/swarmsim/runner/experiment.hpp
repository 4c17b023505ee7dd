#pragma once

#include <string>

#include "swarmsim/runner/config.hpp"

namespace swarmsim::runner {

// run() exit codes.
inline constexpr int kExitOk = 0;        // every seed clean
inline constexpr int kExitFailed = 1;    // at least one seed did not complete
inline constexpr int kExitDegraded = 2;  // completed, but some decisions fell back

struct RunResult {
  int exit_code = kExitOk;
  long long degraded_ticks = 0;  // summed over seeds
  std::string error;             // first seed failure message, if any
};

// Executes every seed of a finalized config into out_dir: manifest.json
// first (status "running"), one directory of JSONL logs per seed, the
// aggregate metric CSVs, a reusable config.txt, then the final manifest.
// Seeds that throw are recorded as failed; the rest still run.
RunResult run_experiment(const RunConfig& cfg, const std::string& out_dir);

// Section-format config text that load_config_file() accepts; written into
// the output directory so a run can be reproduced from its artifacts.
std::string render_config_file(const RunConfig& cfg);

}  // namespace swarmsim::runner
