#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swarmsim/ants/types.hpp"
#include "swarmsim/ants/world.hpp"
#include "swarmsim/llm/controllers.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::engine {

// Everything that happened to one ant in one tick, in poll order.
struct AntTickRecord {
  long long tick = 0;
  int agent_id = 0;
  std::string controller_kind;
  ants::AntPerception perception;
  ants::AntAction action;
  ants::AppliedFlags applied;
  std::optional<std::string> raw_response;
  bool fallback = false;
  int picked_patch = 0;  // food source id when food was picked up this tick
  std::vector<llm::CallRecord> calls;
};

// Sequential-update foraging loop: each tick shuffles the poll order, runs
// observe -> decide -> apply per ant against the live world, then advances the
// pheromone field once. All randomness comes from named per-agent streams
// derived from the master seed, so a run is a pure function of (seed, config)
// for any non-remote controller set.
class AntSimulation {
 public:
  // All-rule-based population.
  AntSimulation(const ants::AntsParams& params, int population, std::uint64_t master_seed);

  // Caller-supplied controllers; agent ids are the vector indices.
  AntSimulation(const ants::AntsParams& params, std::uint64_t master_seed,
                std::vector<std::unique_ptr<llm::AntController>> controllers);

  const ants::AntsWorld& world() const { return world_; }
  const std::vector<ants::AntState>& ants() const { return ants_; }
  long long tick() const { return tick_; }

  // Advances one tick and reports what each ant saw and did.
  std::vector<AntTickRecord> step();

 private:
  ants::AntsWorld world_;
  std::vector<ants::AntState> ants_;
  std::vector<std::unique_ptr<llm::AntController>> controllers_;
  std::vector<RngStream> action_rngs_;
  RngStream schedule_rng_;
  long long tick_ = 0;
};

// One rule-based controller per agent, policy streams derived from the seed.
std::vector<std::unique_ptr<llm::AntController>> make_rule_based_ants(
    const ants::AntsParams& params, int population, std::uint64_t master_seed);

}  // namespace swarmsim::engine
