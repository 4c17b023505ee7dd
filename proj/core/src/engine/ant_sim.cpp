#include "swarmsim/engine/ant_sim.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace swarmsim::engine {

std::vector<std::unique_ptr<llm::AntController>> make_rule_based_ants(
    const ants::AntsParams& params, int population, std::uint64_t master_seed) {
  std::vector<std::unique_ptr<llm::AntController>> controllers;
  controllers.reserve(static_cast<std::size_t>(population));
  for (int i = 0; i < population; ++i) {
    controllers.push_back(std::make_unique<llm::RuleBasedAntController>(
        params, RngStream::derive(master_seed, static_cast<std::uint64_t>(i), "policy")));
  }
  return controllers;
}

AntSimulation::AntSimulation(const ants::AntsParams& params, int population,
                             std::uint64_t master_seed)
    : AntSimulation(params, master_seed, make_rule_based_ants(params, population, master_seed)) {}

AntSimulation::AntSimulation(const ants::AntsParams& params, std::uint64_t master_seed,
                             std::vector<std::unique_ptr<llm::AntController>> controllers)
    : world_(params, master_seed),
      ants_(ants::spawn_ants(static_cast<int>(controllers.size()), master_seed)),
      controllers_(std::move(controllers)),
      schedule_rng_(RngStream::derive(master_seed, kEngineAgentId, "schedule")) {
  if (controllers_.empty()) {
    throw std::invalid_argument("ant simulation needs at least one agent");
  }
  action_rngs_.reserve(ants_.size());
  for (const ants::AntState& a : ants_) {
    action_rngs_.push_back(
        RngStream::derive(master_seed, static_cast<std::uint64_t>(a.id), "action"));
  }
}

std::vector<AntTickRecord> AntSimulation::step() {
  ++tick_;
  std::vector<int> order(ants_.size());
  std::iota(order.begin(), order.end(), 0);
  schedule_rng_.shuffle(order);

  std::vector<AntTickRecord> records;
  records.reserve(order.size());
  for (int idx : order) {
    ants::AntState& ant = ants_[static_cast<std::size_t>(idx)];
    const ants::AntObservation obs = world_.observe(ant);
    llm::AntDecisionOutcome out =
        controllers_[static_cast<std::size_t>(idx)]->decide(obs, tick_, ant.id);

    AntTickRecord rec;
    rec.tick = tick_;
    rec.agent_id = ant.id;
    rec.controller_kind = std::string(controllers_[static_cast<std::size_t>(idx)]->kind());
    rec.perception = obs.perception;
    rec.action = out.action;
    rec.raw_response = std::move(out.raw_response);
    rec.fallback = out.fallback;
    rec.calls = std::move(out.calls);
    rec.applied = world_.apply(ant, out.action, action_rngs_[static_cast<std::size_t>(idx)]);
    if (rec.applied.picked_up) rec.picked_patch = ant.picked_from_patch;
    records.push_back(std::move(rec));
  }
  world_.env_update();
  return records;
}

}  // namespace swarmsim::engine
