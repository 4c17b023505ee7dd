#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swarmsim/flocking/types.hpp"
#include "swarmsim/flocking/world.hpp"
#include "swarmsim/llm/controllers.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::engine {

struct BirdTickRecord {
  long long tick = 0;
  int agent_id = 0;
  std::string controller_kind;
  double heading_before = 0.0;
  int neighbor_count = 0;
  double new_heading = 0.0;
  std::optional<std::string> raw_response;
  bool fallback = false;
  std::vector<llm::CallRecord> calls;
};

// Synchronous-update flocking loop: each tick snapshots the flock, polls the
// birds in a shuffled order for decisions against that snapshot, then applies
// every decision (turn + unit advance with torus wrap).
class FlockSimulation {
 public:
  // All-rule-based population.
  FlockSimulation(const flocking::FlockParams& params, int population, std::uint64_t master_seed);

  // Caller-supplied controllers; agent ids are the vector indices.
  FlockSimulation(const flocking::FlockParams& params, std::uint64_t master_seed,
                  std::vector<std::unique_ptr<llm::BirdController>> controllers);

  const flocking::FlockWorld& world() const { return world_; }
  const std::vector<flocking::BirdState>& birds() const { return world_.birds(); }
  long long tick() const { return tick_; }

  std::vector<BirdTickRecord> step();

 private:
  flocking::FlockWorld world_;
  std::vector<std::unique_ptr<llm::BirdController>> controllers_;
  RngStream schedule_rng_;
  long long tick_ = 0;
};

std::vector<std::unique_ptr<llm::BirdController>> make_rule_based_birds(
    const flocking::FlockParams& params, int population);

}  // namespace swarmsim::engine
