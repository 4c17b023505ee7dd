#pragma once

#include <string>

#include "swarmsim/geometry.hpp"

namespace swarmsim::ants {

// Sensor / rotation directions. Sensing covers three forward cones at
// heading -45° (left), 0° (front), +45° (right), sampled at distance 1.
enum class SenseDir { kLeft, kFront, kRight, kNone };

enum class Rotate { kLeft, kRight, kNone, kRandom };

// The five-key action vocabulary. Exactly these fields, nothing else.
struct AntAction {
  bool move_forward = false;
  Rotate rotate = Rotate::kNone;
  bool pick_up_food = false;
  bool drop_pheromone = false;
  bool drop_food = false;

  bool operator==(const AntAction&) const = default;
};

// Categorical view of the world handed to controllers (numeric scent values
// are intentionally absent; directional cues plus the local food count are
// the whole interface).
struct AntPerception {
  SenseDir highest_pheromone_dir = SenseDir::kNone;
  bool nest_presence = false;
  SenseDir stronger_nest_scent_dir = SenseDir::kFront;  // never kNone
  int food_here = 0;
  bool carrying = false;

  bool operator==(const AntPerception&) const = default;
};

// Raw readings backing a perception; kept for the rule-based policy (pheromone
// follow window) and the numeric historical prompt styles.
struct SensorReadings {
  // index 0 = left, 1 = front, 2 = right
  double pheromone[3] = {0.0, 0.0, 0.0};
  double nest_scent[3] = {0.0, 0.0, 0.0};
  bool in_bounds[3] = {false, false, false};
};

struct AntObservation {
  AntPerception perception;
  SensorReadings readings;
};

struct AntState {
  int id = 0;
  Vec2 pos;             // continuous patch coordinates; current cell = nearest patch
  double heading = 0.0;
  bool carrying = false;
  int picked_from_patch = 0;  // 0 = none, else food source id 1..3
};

struct PatchCell {
  double pheromone = 0.0;
  int food = 0;
  bool is_nest = false;
  double nest_scent = 0.0;
  int food_source_id = 0;  // 0 = none
};

struct AppliedFlags {
  bool moved = false;
  bool rotated = false;
  bool picked_up = false;
  bool dropped_pheromone = false;
  bool dropped_food = false;

  bool operator==(const AppliedFlags&) const = default;
};

struct FoodPatchSpec {
  int id = 0;  // 1 nearest the nest .. 3 farthest
  Vec2 center;
  double radius = 0.0;
  int min_units = 1;
  int max_units = 2;
};

struct AntsParams {
  int half_extent = kDefaultHalfExtent;
  double deposit = 60.0;           // pheromone added per drop
  double diffusion_rate = 0.5;     // fraction shed to the 8 neighbors per tick
  double evaporation_rate = 0.1;   // fraction lost per tick
  double sensing_floor = 0.05;     // below this the field reads as silence (and clamps to 0)
  double follow_low = 0.05;        // rule-based policy follows pheromone when
  double follow_high = 2.0;        // the strongest reading is in [low, high)
  double rotation_step_deg = 45.0;
  double nest_radius = 5.0;
  double food_radius = 5.0;
  int food_min_units = 1;
  int food_max_units = 2;
};

std::string to_string(SenseDir d);    // "Left" / "Front" / "Right" / "None"
std::string to_string(Rotate r);      // "left" / "right" / "none" / "random"

}  // namespace swarmsim::ants
