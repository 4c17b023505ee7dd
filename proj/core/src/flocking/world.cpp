#include "swarmsim/flocking/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarmsim/heading.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::flocking {

FlockWorld::FlockWorld(const FlockParams& params, int population, std::uint64_t master_seed)
    : params_(params), torus_(kDefaultSpan) {
  if (!(params.minimum_separation < params.vision)) {
    throw std::invalid_argument("FlockParams: minimum_separation must be < vision");
  }
  birds_.reserve(static_cast<std::size_t>(population));
  const double half = torus_.span() / 2.0;
  for (int i = 0; i < population; ++i) {
    RngStream setup = RngStream::derive(master_seed, static_cast<std::uint64_t>(i), "setup");
    BirdState b;
    b.id = i;
    b.pos.x = setup.uniform_real(-half, half);
    b.pos.y = setup.uniform_real(-half, half);
    b.heading = static_cast<double>(setup.uniform_below(360));
    birds_.push_back(b);
  }
}

std::vector<NeighborView> flock_neighbors(const std::vector<BirdState>& birds, const Torus& torus,
                                          const BirdState& bird, double vision) {
  std::vector<NeighborView> out;
  for (const BirdState& other : birds) {
    if (other.id == bird.id) continue;
    const Vec2 rel = torus.displacement(bird.pos, other.pos);
    const double d = std::hypot(rel.x, rel.y);
    if (d <= vision) {
      out.push_back({other.id, rel, d, other.heading});
    }
  }
  std::sort(out.begin(), out.end(), [](const NeighborView& a, const NeighborView& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.id < b.id;
  });
  return out;
}

std::vector<NeighborObs> neighbors_of(const std::vector<BirdState>& birds, const Torus& torus,
                                      const BirdState& bird, double vision) {
  std::vector<NeighborObs> out;
  for (const NeighborView& v : flock_neighbors(birds, torus, bird, vision)) {
    NeighborObs o;
    o.rel_x = v.rel.x;
    o.rel_y = v.rel.y;
    o.heading_deg = static_cast<int>(normalize_heading(std::round(v.heading)));
    out.push_back(o);
  }
  return out;
}

void apply_bird_decision(const Torus& torus, BirdState& bird, const BirdDecision& d,
                         const FlockParams& params) {
  bird.heading = normalize_heading(d.new_heading);
  bird.pos.x += params.speed * heading_unit_x(bird.heading);
  bird.pos.y += params.speed * heading_unit_y(bird.heading);
  bird.pos = torus.wrap(bird.pos);
}

}  // namespace swarmsim::flocking
