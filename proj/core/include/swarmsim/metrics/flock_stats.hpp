#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swarmsim/flocking/types.hpp"
#include "swarmsim/geometry.hpp"

namespace swarmsim::metrics {

// Fixed analysis thresholds (patch units / degrees).
inline constexpr double kCollisionDistance = 1.0;        // pair collides when d <= 1
inline constexpr double kNeighborhoodRadius = 5.0;       // neighborhood when 1 < d <= 5
inline constexpr double kNeighborHeadingTolDeg = 15.0;   // ...and |heading diff| <= 15

struct HeadingDiffStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
  std::size_t pairs = 0;
};

// |signed heading difference| between every bird in `group_ids` and every
// other bird in the flock (member -> other, so intra-group pairs count from
// both ends). nullopt when no such pair exists.
std::optional<HeadingDiffStats> heading_difference(const std::vector<flocking::BirdState>& birds,
                                                   const std::vector<int>& group_ids);

struct PairwiseStats {
  int collisions = 0;                // unordered pairs with distance <= kCollisionDistance
  std::vector<int> neighbor_counts;  // per bird (indexed like `birds`): aligned neighbors
};

// Torus-metric collision count and per-bird aligned-neighbor counts in the
// 1 < d <= 5 shell.
PairwiseStats pairwise_stats(const std::vector<flocking::BirdState>& birds, const Torus& torus);

}  // namespace swarmsim::metrics
