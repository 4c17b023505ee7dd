#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "swarmsim/ants/prompts.hpp"
#include "swarmsim/ants/world.hpp"
#include "swarmsim/engine/ant_sim.hpp"
#include "swarmsim/engine/flock_sim.hpp"
#include "swarmsim/flocking/prompts.hpp"
#include "swarmsim/llm/oracle.hpp"
#include "swarmsim/metrics/flock_stats.hpp"
#include "swarmsim/metrics/stats.hpp"
#include "swarmsim/rng.hpp"

namespace {

using namespace swarmsim;

void BM_PheromoneField(benchmark::State& state) {
  ants::AntsWorld world(ants::AntsParams{}, 1);
  // Seed some mass so diffusion touches the whole update path.
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) world.cell(x, y).pheromone = 10.0;
  for (auto _ : state) {
    world.env_update();
    benchmark::DoNotOptimize(world.pheromone_total());
  }
}
BENCHMARK(BM_PheromoneField);

void BM_AntTick(benchmark::State& state) {
  engine::AntSimulation sim(ants::AntsParams{}, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
}
BENCHMARK(BM_AntTick)->Arg(10)->Arg(100);

void BM_FlockTick(benchmark::State& state) {
  engine::FlockSimulation sim(flocking::FlockParams{}, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
}
BENCHMARK(BM_FlockTick)->Arg(30)->Arg(300);

void BM_AntPromptRoundTrip(benchmark::State& state) {
  ants::AntPerception p;
  p.highest_pheromone_dir = ants::SenseDir::kLeft;
  p.nest_presence = false;
  p.stronger_nest_scent_dir = ants::SenseDir::kFront;
  p.food_here = 0;
  p.carrying = false;
  for (auto _ : state) {
    const std::string prompt = ants::render_ant_user_prompt(p);
    benchmark::DoNotOptimize(llm::oracle_ant_decision(prompt));
  }
}
BENCHMARK(BM_AntPromptRoundTrip);

void BM_AntResponseParse(benchmark::State& state) {
  const std::string text =
      "{move-forward: True, rotate-left-45: False, rotate-right-45: False, "
      "pick-up-food: False, drop-pheromone: False}";
  for (auto _ : state) benchmark::DoNotOptimize(ants::parse_ant_response(text));
}
BENCHMARK(BM_AntResponseParse);

void BM_BirdPromptRoundTrip(benchmark::State& state) {
  const flocking::FlockParams params;
  std::vector<flocking::NeighborObs> neighbors;
  neighbors.push_back({0.53, -3.69, 248});
  neighbors.push_back({-1.25, 2.0, 31});
  neighbors.push_back({4.0, 0.75, 115});
  for (auto _ : state) {
    const std::string prompt = flocking::render_bird_user_prompt(138, params, neighbors);
    benchmark::DoNotOptimize(llm::oracle_bird_decision(prompt));
  }
}
BENCHMARK(BM_BirdPromptRoundTrip);

void BM_Summarize(benchmark::State& state) {
  RngStream rng(7);
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(rng.uniform_real(0.0, 100.0));
  for (auto _ : state) {
    auto copy = xs;
    benchmark::DoNotOptimize(metrics::summarize(std::move(copy)));
  }
}
BENCHMARK(BM_Summarize);

void BM_PairwiseStats(benchmark::State& state) {
  const Torus torus;
  RngStream rng(11);
  std::vector<flocking::BirdState> birds;
  for (int i = 0; i < state.range(0); ++i) {
    flocking::BirdState b;
    b.id = i;
    b.pos = {rng.uniform_real(-35.5, 35.5), rng.uniform_real(-35.5, 35.5)};
    b.heading = rng.uniform_real(0.0, 360.0);
    birds.push_back(b);
  }
  for (auto _ : state) benchmark::DoNotOptimize(metrics::pairwise_stats(birds, torus));
}
BENCHMARK(BM_PairwiseStats)->Arg(30)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
