#include "swarmsim/flocking/policy.hpp"

#include <cmath>

#include "swarmsim/heading.hpp"

namespace swarmsim::flocking {

double flock_rule_heading(double heading, const std::vector<NeighborView>& neighbors,
                          const FlockParams& params) {
  if (neighbors.empty()) return normalize_heading(heading);

  const NeighborView& nearest = neighbors.front();
  if (nearest.distance < params.minimum_separation) {
    // Turn away: widen the gap between our heading and the neighbor's heading
    // by the (capped) shortest-path difference. Equal headings yield no turn.
    const double delta = subtract_headings(heading, nearest.heading);
    const double turn =
        std::fabs(delta) <= params.max_separate_turn ? delta
                                                     : std::copysign(params.max_separate_turn, delta);
    return normalize_heading(heading + turn);
  }

  std::vector<double> headings;
  headings.reserve(neighbors.size());
  for (const NeighborView& n : neighbors) headings.push_back(n.heading);
  double h = heading;
  if (auto mean = circular_mean_heading(headings)) {
    h = turn_at_most(h, *mean, params.max_align_turn);
  }

  std::vector<double> bearings;
  bearings.reserve(neighbors.size());
  for (const NeighborView& n : neighbors) bearings.push_back(bearing_of(n.rel.x, n.rel.y));
  if (auto mean = circular_mean_heading(bearings)) {
    h = turn_at_most(h, *mean, params.max_cohere_turn);
  }
  return normalize_heading(h);
}

BirdDecision rule_based_bird_policy(const FlockWorld& world, const BirdState& bird,
                                    const FlockParams& params) {
  const auto neighbors = flock_neighbors(world.birds(), world.torus(), bird, params.vision);
  return {flock_rule_heading(bird.heading, neighbors, params), std::nullopt};
}

}  // namespace swarmsim::flocking
