#include "swarmsim/engine/flock_sim.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "swarmsim/heading.hpp"

namespace swarmsim::engine {

std::vector<std::unique_ptr<llm::BirdController>> make_rule_based_birds(
    const flocking::FlockParams& params, int population) {
  std::vector<std::unique_ptr<llm::BirdController>> controllers;
  controllers.reserve(static_cast<std::size_t>(population));
  for (int i = 0; i < population; ++i) {
    controllers.push_back(std::make_unique<llm::RuleBasedBirdController>(params));
  }
  return controllers;
}

FlockSimulation::FlockSimulation(const flocking::FlockParams& params, int population,
                                 std::uint64_t master_seed)
    : FlockSimulation(params, master_seed, make_rule_based_birds(params, population)) {}

FlockSimulation::FlockSimulation(const flocking::FlockParams& params, std::uint64_t master_seed,
                                 std::vector<std::unique_ptr<llm::BirdController>> controllers)
    : world_(params, static_cast<int>(controllers.size()), master_seed),
      controllers_(std::move(controllers)),
      schedule_rng_(RngStream::derive(master_seed, kEngineAgentId, "schedule")) {
  if (controllers_.empty()) {
    throw std::invalid_argument("flock simulation needs at least one agent");
  }
}

std::vector<BirdTickRecord> FlockSimulation::step() {
  ++tick_;
  std::vector<flocking::BirdState>& birds = world_.birds();
  const std::vector<flocking::BirdState> snapshot = birds;
  const flocking::FlockParams& params = world_.params();

  std::vector<int> order(birds.size());
  std::iota(order.begin(), order.end(), 0);
  schedule_rng_.shuffle(order);

  std::vector<BirdTickRecord> records;
  records.reserve(order.size());
  std::vector<flocking::BirdDecision> decisions(birds.size());
  for (int idx : order) {
    const flocking::BirdState& bird = snapshot[static_cast<std::size_t>(idx)];
    llm::BirdObservation obs;
    obs.heading = bird.heading;
    obs.views = flocking::flock_neighbors(snapshot, world_.torus(), bird, params.vision);
    obs.obs = flocking::neighbors_of(snapshot, world_.torus(), bird, params.vision);

    llm::BirdDecisionOutcome out =
        controllers_[static_cast<std::size_t>(idx)]->decide(obs, tick_, bird.id);
    decisions[static_cast<std::size_t>(idx)] = out.decision;

    BirdTickRecord rec;
    rec.tick = tick_;
    rec.agent_id = bird.id;
    rec.controller_kind = std::string(controllers_[static_cast<std::size_t>(idx)]->kind());
    rec.heading_before = bird.heading;
    rec.neighbor_count = static_cast<int>(obs.views.size());
    rec.new_heading = normalize_heading(out.decision.new_heading);
    rec.raw_response = std::move(out.raw_response);
    rec.fallback = out.fallback;
    rec.calls = std::move(out.calls);
    records.push_back(std::move(rec));
  }
  for (int idx : order) {
    flocking::apply_bird_decision(world_.torus(), birds[static_cast<std::size_t>(idx)],
                                  decisions[static_cast<std::size_t>(idx)], params);
  }
  return records;
}

}  // namespace swarmsim::engine
