#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmsim/ants/types.hpp"
#include "swarmsim/flocking/types.hpp"
#include "swarmsim/llm/endpoint.hpp"
#include "swarmsim/scenario.hpp"

namespace swarmsim::runner {

// Invalid configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ControllerGroup {
  std::string kind;  // rule_based | scripted_oracle | llm_remote | rule_table
  int count = 0;
};

// The effective experiment description. Zero/empty fields mean "not set";
// finalize_config() fills scenario-appropriate defaults and validates the
// cross-field invariants.
struct RunConfig {
  Scenario scenario = Scenario::kAnts;
  bool scenario_set = false;
  long long steps = 0;
  int population = 0;
  std::vector<ControllerGroup> controller_mix;
  std::string template_name;
  std::vector<std::uint64_t> seeds;
  ants::AntsParams ant_params;
  flocking::FlockParams flock_params;
  std::optional<llm::LlmEndpointConfig> llm;
};

// CLI-level overrides (flag > file > default).
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> controller_mix;
  std::optional<std::string> template_name;
};

// Key = value lines with [section] blocks ([ant_params], [flock_params],
// [llm]); '#' starts a comment. Unknown sections or keys and malformed values
// raise ConfigError naming the key.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

// "kind:count[,kind:count]..." with known kinds and positive counts.
std::vector<ControllerGroup> parse_controller_mix(const std::string& text);

// Applies overrides, fills defaults (ants: 10 agents / 1000 steps; flocking:
// 30 / 800; seeds 1..5; scenario's deployed template; all-rule mix), and
// enforces: mix sums to population, template exists and matches the scenario,
// scripted_oracle needs an oracle-compatible template, and the [llm] block is
// present exactly when the mix contains llm_remote.
RunConfig finalize_config(RunConfig cfg, const RunOverrides& overrides);

// Every effective field as sorted "key=value" lines; the run digest hashes
// this, so it is stable under reordering of the source file.
std::string canonical_config_text(const RunConfig& cfg);

}  // namespace swarmsim::runner
