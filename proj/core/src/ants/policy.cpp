#include "swarmsim/ants/policy.hpp"

#include <algorithm>

namespace swarmsim::ants {

namespace {

// Wiggle: the library model turns by (random 40 - random 40) degrees each
// searching step, a triangular distribution on (-40, 40). The action
// vocabulary only offers fixed left/none/right steps, so the draw is
// quantized: |t| >= 25 becomes a turn, else none. The 25° threshold matches
// the angular variance of the original wiggle (~266 deg²/step) as closely as
// the 45° step allows (~285 deg²/step).
constexpr double kWiggleQuantizeThreshold = 25.0;

Rotate toward(SenseDir d) {
  switch (d) {
    case SenseDir::kLeft: return Rotate::kLeft;
    case SenseDir::kRight: return Rotate::kRight;
    default: return Rotate::kNone;
  }
}

}  // namespace

AntAction rule_based_ant_policy(const AntObservation& obs, const AntsParams& params,
                                RngStream& rng) {
  const AntPerception& p = obs.perception;
  AntAction a;

  if (p.carrying) {
    if (p.nest_presence) {
      a.drop_food = true;
      a.move_forward = true;  // the drop turns the ant around; it walks straight back out
      return a;
    }
    a.drop_pheromone = true;
    a.rotate = toward(p.stronger_nest_scent_dir);
    a.move_forward = true;
    return a;
  }

  if (p.food_here > 0) {
    a.pick_up_food = true;
    return a;
  }

  const double* ph = obs.readings.pheromone;
  const double strongest = std::max(ph[0], std::max(ph[1], ph[2]));
  if (strongest >= params.follow_low && strongest < params.follow_high) {
    a.rotate = toward(p.highest_pheromone_dir);
    a.move_forward = true;
    return a;
  }

  const double t = rng.uniform_real(0.0, 40.0) - rng.uniform_real(0.0, 40.0);
  if (t <= -kWiggleQuantizeThreshold) {
    a.rotate = Rotate::kLeft;
  } else if (t >= kWiggleQuantizeThreshold) {
    a.rotate = Rotate::kRight;
  }
  a.move_forward = true;
  return a;
}

AntAction rule_based_ant_policy(const AntsWorld& world, const AntState& ant, RngStream& rng) {
  return rule_based_ant_policy(world.observe(ant), world.params(), rng);
}

AntAction ant_decision_table(const AntPerception& p) {
  AntAction a;
  if (p.carrying) {
    if (p.nest_presence) {
      a.drop_food = true;
      a.move_forward = true;
      return a;
    }
    a.drop_pheromone = true;
    a.rotate = toward(p.stronger_nest_scent_dir);
    a.move_forward = true;
    return a;
  }
  if (p.food_here > 0) {
    // "Release pheromone on food source": the pickup tick also deposits.
    a.pick_up_food = true;
    a.drop_pheromone = true;
    return a;
  }
  if (p.highest_pheromone_dir != SenseDir::kNone) {
    a.rotate = toward(p.highest_pheromone_dir);
    a.move_forward = true;
    return a;
  }
  // Nothing sensed: move away from the nest, rotating randomly.
  a.move_forward = true;
  a.rotate = Rotate::kRandom;
  return a;
}

}  // namespace swarmsim::ants
