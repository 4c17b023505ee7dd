#pragma once

#include <optional>
#include <string>

#include "swarmsim/geometry.hpp"

namespace swarmsim::flocking {

struct FlockParams {
  double max_separate_turn = 1.5;   // degrees
  double max_align_turn = 5.0;      // degrees
  double max_cohere_turn = 3.0;     // degrees
  double minimum_separation = 1.5;  // patch units
  double vision = 5.0;              // patch units
  double speed = 1.0;               // patch units per tick
};

struct BirdState {
  int id = 0;
  Vec2 pos;
  double heading = 0.0;
  bool is_llm = false;
};

// Neighbor as exposed to prompts: torus-shortest displacement (x east,
// y north) and the neighbor's heading rounded to whole degrees.
struct NeighborObs {
  double rel_x = 0.0;
  double rel_y = 0.0;
  int heading_deg = 0;
};

// Full-precision neighbor view used by the rule-based policy.
struct NeighborView {
  int id = 0;
  Vec2 rel;
  double distance = 0.0;
  double heading = 0.0;
};

struct BirdDecision {
  double new_heading = 0.0;
  std::optional<std::string> rationale;  // LLM responses only

  bool operator==(const BirdDecision& other) const { return new_heading == other.new_heading; }
};

}  // namespace swarmsim::flocking
