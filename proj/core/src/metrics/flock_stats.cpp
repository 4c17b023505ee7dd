#include "swarmsim/metrics/flock_stats.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "swarmsim/heading.hpp"

namespace swarmsim::metrics {

std::optional<HeadingDiffStats> heading_difference(const std::vector<flocking::BirdState>& birds,
                                                   const std::vector<int>& group_ids) {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;
  for (int gid : group_ids) {
    if (gid < 0 || static_cast<std::size_t>(gid) >= birds.size()) {
      throw std::out_of_range("heading_difference: group id outside flock");
    }
    const flocking::BirdState& g = birds[static_cast<std::size_t>(gid)];
    for (const flocking::BirdState& other : birds) {
      if (other.id == g.id) continue;
      const double d = std::abs(subtract_headings(other.heading, g.heading));
      sum += d;
      sum_sq += d * d;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  HeadingDiffStats s;
  s.pairs = n;
  s.mean = sum / static_cast<double>(n);
  const double var = sum_sq / static_cast<double>(n) - s.mean * s.mean;
  s.stddev = std::sqrt(var > 0.0 ? var : 0.0);
  return s;
}

PairwiseStats pairwise_stats(const std::vector<flocking::BirdState>& birds, const Torus& torus) {
  PairwiseStats out;
  out.neighbor_counts.assign(birds.size(), 0);
  for (std::size_t i = 0; i < birds.size(); ++i) {
    for (std::size_t j = i + 1; j < birds.size(); ++j) {
      const double d = torus.distance(birds[i].pos, birds[j].pos);
      if (d <= kCollisionDistance) {
        ++out.collisions;
      } else if (d <= kNeighborhoodRadius) {
        const double diff = std::abs(subtract_headings(birds[i].heading, birds[j].heading));
        if (diff <= kNeighborHeadingTolDeg) {
          ++out.neighbor_counts[i];
          ++out.neighbor_counts[j];
        }
      }
    }
  }
  return out;
}

}  // namespace swarmsim::metrics
