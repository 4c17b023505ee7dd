#pragma once

#include "swarmsim/ants/types.hpp"
#include "swarmsim/ants/world.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::ants {

// Faithful port of the reference foraging rules into the five-key action
// vocabulary. Carrying: deposit pheromone, climb the nest-scent gradient,
// drop at the nest (the 180° turn-back happens on application). Searching:
// pick up food underfoot; else follow the strongest pheromone reading when it
// lies inside [follow_low, follow_high); else wiggle (the bounded random turn
// quantized onto the left/none/right rotation step) and advance.
AntAction rule_based_ant_policy(const AntsWorld& world, const AntState& ant, RngStream& rng);

// Same policy expressed over a pre-built observation (what controllers use;
// the free function above wraps it to match the world-facing signature).
AntAction rule_based_ant_policy(const AntObservation& obs, const AntsParams& params,
                                RngStream& rng);

// The final prompt's decision table over the categorical perception alone.
// This is what the scripted oracle applies after re-parsing the rendered user
// prompt, and what a direct table-driven controller applies without the text
// round trip; the two must agree action-for-action.
AntAction ant_decision_table(const AntPerception& p);

}  // namespace swarmsim::ants
