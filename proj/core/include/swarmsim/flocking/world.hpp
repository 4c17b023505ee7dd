#pragma once

#include <cstdint>
#include <vector>

#include "swarmsim/flocking/types.hpp"
#include "swarmsim/geometry.hpp"

namespace swarmsim::flocking {

// Toroidal world holding the flock. Geometry matches the ant grid footprint
// (71x71 patch units) but wraps at the edges.
class FlockWorld {
 public:
  FlockWorld(const FlockParams& params, int population, std::uint64_t master_seed);

  const FlockParams& params() const { return params_; }
  const Torus& torus() const { return torus_; }

  std::vector<BirdState>& birds() { return birds_; }
  const std::vector<BirdState>& birds() const { return birds_; }

 private:
  FlockParams params_;
  Torus torus_;
  std::vector<BirdState> birds_;
};

// Full-precision neighbors of `bird` within `vision`, sorted by distance
// ascending (ties by id); excludes the bird itself.
std::vector<NeighborView> flock_neighbors(const std::vector<BirdState>& birds, const Torus& torus,
                                          const BirdState& bird, double vision);

// Prompt-facing neighbor list (same ordering, headings rounded to integers).
std::vector<NeighborObs> neighbors_of(const std::vector<BirdState>& birds, const Torus& torus,
                                      const BirdState& bird, double vision);

// Applies a decision: adopt the (normalized) new heading, then advance
// `speed` along it with torus wrap.
void apply_bird_decision(const Torus& torus, BirdState& bird, const BirdDecision& d,
                         const FlockParams& params);

}  // namespace swarmsim::flocking
