#pragma once

#include <vector>

#include "swarmsim/flocking/types.hpp"
#include "swarmsim/flocking/world.hpp"

namespace swarmsim::flocking {

// The three-principle rule set, applied to a heading given its neighbor views:
//  - no neighbors: heading unchanged;
//  - nearest neighbor closer than minimum_separation: turn away from that
//    neighbor's heading, capped at max_separate_turn (align/cohere skipped);
//  - otherwise: align toward the circular-mean neighbor heading (cap
//    max_align_turn) then cohere toward the circular mean of the bearings to
//    the neighbors (cap max_cohere_turn), sequentially.
double flock_rule_heading(double heading, const std::vector<NeighborView>& neighbors,
                          const FlockParams& params);

// World-facing wrapper: gathers neighbors within params.vision and applies
// the rules to `bird`.
BirdDecision rule_based_bird_policy(const FlockWorld& world, const BirdState& bird,
                                    const FlockParams& params);

}  // namespace swarmsim::flocking
