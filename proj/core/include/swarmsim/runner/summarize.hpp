#pragma once

#include <string>

#include "swarmsim/runner/config.hpp"

namespace swarmsim::runner {

struct SummarizeResult {
  int exit_code = 0;
  std::string report;  // console tables
};

// Rebuilds the distribution tables from a finished run directory's aggregate
// CSVs (trips/searches for ants; pairwise/headings for flocking) and writes a
// machine-readable summary.csv next to them. A directory without run data
// raises ConfigError ("no runs found").
SummarizeResult summarize_directory(const std::string& dir);

}  // namespace swarmsim::runner
