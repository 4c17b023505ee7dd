#pragma once

#include <cstdint>
#include <vector>

#include "swarmsim/ants/types.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::ants {

// Bounded (2*half_extent+1)^2 patch grid with a nest disk at the origin, a
// static nest-scent gradient (200 - distance to origin), three food disks, and
// a diffusing/evaporating pheromone field.
class AntsWorld {
 public:
  AntsWorld(const AntsParams& params, std::uint64_t master_seed);

  const AntsParams& params() const { return params_; }
  int half_extent() const { return params_.half_extent; }
  bool contains(int x, int y) const;

  const PatchCell& cell(int x, int y) const;
  PatchCell& cell(int x, int y);
  const PatchCell& cell_at(Vec2 pos) const;

  const std::vector<FoodPatchSpec>& food_patches() const { return food_patches_; }

  // Full observation (categorical perception + raw sensor readings).
  AntObservation observe(const AntState& ant) const;
  // Categorical perception only.
  AntPerception sense(const AntState& ant) const;

  // Applies one action in the fixed sub-action order:
  // pick up -> drop food -> drop pheromone -> rotate -> move forward.
  // Infeasible sub-actions are no-ops; the returned flags record what stuck.
  // `action_rng` resolves rotate=random into a uniform left/right turn.
  AppliedFlags apply(AntState& ant, const AntAction& action, RngStream& action_rng);

  // Pheromone dynamics, once per tick after all agents acted: diffuse a
  // fraction equally toward the 8 neighbors (shares that would leave the grid
  // stay put, so diffusion conserves mass), evaporate, clamp sub-floor to 0.
  void env_update();

  long long colony_food() const { return colony_food_; }
  long long initial_food() const { return initial_food_; }
  long long patch_food_total() const;
  double pheromone_total() const;

 private:
  int index(int x, int y) const;
  SensorReadings read_sensors(const AntState& ant) const;

  AntsParams params_;
  int width_;
  std::vector<PatchCell> cells_;
  std::vector<double> scratch_;  // diffusion buffer
  std::vector<FoodPatchSpec> food_patches_;
  long long colony_food_ = 0;
  long long initial_food_ = 0;
};

// Spawns `population` ants at the nest center with seeded random integer
// headings (per-agent "setup" streams).
std::vector<AntState> spawn_ants(int population, std::uint64_t master_seed);

}  // namespace swarmsim::ants
