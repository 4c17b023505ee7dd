#include "swarmsim/ants/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarmsim/heading.hpp"

namespace swarmsim::ants {

std::string to_string(SenseDir d) {
  switch (d) {
    case SenseDir::kLeft: return "Left";
    case SenseDir::kFront: return "Front";
    case SenseDir::kRight: return "Right";
    case SenseDir::kNone: return "None";
  }
  return "None";
}

std::string to_string(Rotate r) {
  switch (r) {
    case Rotate::kLeft: return "left";
    case Rotate::kRight: return "right";
    case Rotate::kNone: return "none";
    case Rotate::kRandom: return "random";
  }
  return "none";
}

AntsWorld::AntsWorld(const AntsParams& params, std::uint64_t master_seed)
    : params_(params), width_(2 * params.half_extent + 1) {
  cells_.resize(static_cast<std::size_t>(width_) * width_);
  scratch_.resize(cells_.size());

  const int e = params_.half_extent;
  for (int y = -e; y <= e; ++y) {
    for (int x = -e; x <= e; ++x) {
      PatchCell& c = cell(x, y);
      const double dist = std::hypot(static_cast<double>(x), static_cast<double>(y));
      c.nest_scent = 200.0 - dist;
      c.is_nest = dist < params_.nest_radius;
    }
  }

  // Food disks; ids ordered by distance from the nest (1 = nearest).
  const double E = static_cast<double>(e);
  food_patches_ = {
      {1, {0.6 * E, 0.0}, params_.food_radius, params_.food_min_units, params_.food_max_units},
      {2, {-0.6 * E, -0.6 * E}, params_.food_radius, params_.food_min_units, params_.food_max_units},
      {3, {-0.8 * E, 0.8 * E}, params_.food_radius, params_.food_min_units, params_.food_max_units},
  };
  RngStream setup = RngStream::derive(master_seed, kEngineAgentId, "setup");
  for (const FoodPatchSpec& spec : food_patches_) {
    for (int y = -e; y <= e; ++y) {
      for (int x = -e; x <= e; ++x) {
        const double d = std::hypot(x - spec.center.x, y - spec.center.y);
        if (d < spec.radius) {
          PatchCell& c = cell(x, y);
          const std::uint64_t range =
              static_cast<std::uint64_t>(spec.max_units - spec.min_units) + 1;
          c.food = spec.min_units + static_cast<int>(setup.uniform_below(range));
          c.food_source_id = spec.id;
        }
      }
    }
  }
  initial_food_ = patch_food_total();
}

bool AntsWorld::contains(int x, int y) const {
  const int e = params_.half_extent;
  return x >= -e && x <= e && y >= -e && y <= e;
}

int AntsWorld::index(int x, int y) const {
  const int e = params_.half_extent;
  return (y + e) * width_ + (x + e);
}

const PatchCell& AntsWorld::cell(int x, int y) const {
  if (!contains(x, y)) throw std::out_of_range("AntsWorld::cell: out of bounds");
  return cells_[static_cast<std::size_t>(index(x, y))];
}

PatchCell& AntsWorld::cell(int x, int y) {
  if (!contains(x, y)) throw std::out_of_range("AntsWorld::cell: out of bounds");
  return cells_[static_cast<std::size_t>(index(x, y))];
}

const PatchCell& AntsWorld::cell_at(Vec2 pos) const {
  return cell(nearest_patch(pos.x), nearest_patch(pos.y));
}

SensorReadings AntsWorld::read_sensors(const AntState& ant) const {
  SensorReadings r;
  const double offsets[3] = {-45.0, 0.0, +45.0};  // left, front, right
  for (int i = 0; i < 3; ++i) {
    const double h = ant.heading + offsets[i];
    const int sx = nearest_patch(ant.pos.x + heading_unit_x(h));
    const int sy = nearest_patch(ant.pos.y + heading_unit_y(h));
    if (contains(sx, sy)) {
      const PatchCell& c = cell(sx, sy);
      r.in_bounds[i] = true;
      r.pheromone[i] = c.pheromone;
      r.nest_scent[i] = c.nest_scent;
    }
  }
  return r;
}

namespace {

// argmax over (left, front, right) with ties resolved front > left > right.
int argmax_front_first(const double v[3]) {
  if (v[1] >= v[0] && v[1] >= v[2]) return 1;
  if (v[0] >= v[2]) return 0;
  return 2;
}

SenseDir dir_from_index(int i) {
  switch (i) {
    case 0: return SenseDir::kLeft;
    case 1: return SenseDir::kFront;
    default: return SenseDir::kRight;
  }
}

}  // namespace

AntObservation AntsWorld::observe(const AntState& ant) const {
  AntObservation obs;
  obs.readings = read_sensors(ant);

  const double* ph = obs.readings.pheromone;
  const double maxph = std::max(ph[0], std::max(ph[1], ph[2]));
  if (maxph < params_.sensing_floor) {
    obs.perception.highest_pheromone_dir = SenseDir::kNone;
  } else {
    obs.perception.highest_pheromone_dir = dir_from_index(argmax_front_first(ph));
  }

  double scent[3];
  for (int i = 0; i < 3; ++i) {
    scent[i] = obs.readings.in_bounds[i]
                   ? obs.readings.nest_scent[i]
                   : -std::numeric_limits<double>::infinity();
  }
  obs.perception.stronger_nest_scent_dir = dir_from_index(argmax_front_first(scent));

  const PatchCell& here = cell_at(ant.pos);
  obs.perception.nest_presence = here.is_nest;
  obs.perception.food_here = here.food;
  obs.perception.carrying = ant.carrying;
  return obs;
}

AntPerception AntsWorld::sense(const AntState& ant) const { return observe(ant).perception; }

AppliedFlags AntsWorld::apply(AntState& ant, const AntAction& action, RngStream& action_rng) {
  AppliedFlags flags;
  PatchCell& here = cell(nearest_patch(ant.pos.x), nearest_patch(ant.pos.y));

  if (action.pick_up_food && !ant.carrying && here.food > 0) {
    here.food -= 1;
    ant.carrying = true;
    ant.picked_from_patch = here.food_source_id;
    flags.picked_up = true;
  }

  if (action.drop_food && ant.carrying && here.is_nest) {
    colony_food_ += 1;
    ant.carrying = false;
    ant.picked_from_patch = 0;
    ant.heading = normalize_heading(ant.heading + 180.0);
    flags.dropped_food = true;
  }

  if (action.drop_pheromone) {
    here.pheromone += params_.deposit;
    flags.dropped_pheromone = true;
  }

  Rotate r = action.rotate;
  if (r == Rotate::kRandom) {
    r = action_rng.uniform_below(2) == 0 ? Rotate::kLeft : Rotate::kRight;
  }
  if (r == Rotate::kLeft) {
    ant.heading = normalize_heading(ant.heading - params_.rotation_step_deg);
    flags.rotated = true;
  } else if (r == Rotate::kRight) {
    ant.heading = normalize_heading(ant.heading + params_.rotation_step_deg);
    flags.rotated = true;
  }

  if (action.move_forward) {
    const Vec2 target{ant.pos.x + heading_unit_x(ant.heading),
                      ant.pos.y + heading_unit_y(ant.heading)};
    if (contains(nearest_patch(target.x), nearest_patch(target.y))) {
      ant.pos = target;
      flags.moved = true;
    } else {
      ant.heading = normalize_heading(ant.heading + 180.0);  // blocked at the edge
    }
  }
  return flags;
}

void AntsWorld::env_update() {
  const int e = params_.half_extent;
  const double rate = params_.diffusion_rate;

  for (std::size_t i = 0; i < cells_.size(); ++i) scratch_[i] = 0.0;
  for (int y = -e; y <= e; ++y) {
    for (int x = -e; x <= e; ++x) {
      const double amount = cells_[static_cast<std::size_t>(index(x, y))].pheromone;
      if (amount <= 0.0) continue;
      const double share = amount * rate / 8.0;
      double given = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (!contains(x + dx, y + dy)) continue;  // off-grid shares stay put
          scratch_[static_cast<std::size_t>(index(x + dx, y + dy))] += share;
          given += share;
        }
      }
      scratch_[static_cast<std::size_t>(index(x, y))] += amount - given;
    }
  }

  const double keep = 1.0 - params_.evaporation_rate;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    double v = scratch_[i] * keep;
    if (v < params_.sensing_floor) v = 0.0;
    cells_[i].pheromone = v;
  }
}

long long AntsWorld::patch_food_total() const {
  long long total = 0;
  for (const PatchCell& c : cells_) total += c.food;
  return total;
}

double AntsWorld::pheromone_total() const {
  double total = 0.0;
  for (const PatchCell& c : cells_) total += c.pheromone;
  return total;
}

std::vector<AntState> spawn_ants(int population, std::uint64_t master_seed) {
  std::vector<AntState> ants;
  ants.reserve(static_cast<std::size_t>(population));
  for (int i = 0; i < population; ++i) {
    RngStream setup = RngStream::derive(master_seed, static_cast<std::uint64_t>(i), "setup");
    AntState a;
    a.id = i;
    a.pos = {0.0, 0.0};
    a.heading = static_cast<double>(setup.uniform_below(360));
    ants.push_back(a);
  }
  return ants;
}

}  // namespace swarmsim::ants
