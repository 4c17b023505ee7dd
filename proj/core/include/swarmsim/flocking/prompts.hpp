#pragma once

#include <string>
#include <vector>

#include "swarmsim/ants/prompts.hpp"  // Parsed<T>
#include "swarmsim/flocking/types.hpp"

namespace swarmsim::flocking {

enum class FlockUserStyle {
  kPlain,  // v1-v4: blank-line sections, plain "Label: value" lines
  kFinal,  // v5 (deployed): dashed 3-space-indented lines with trailing commas
};

// Renders the user prompt for the deployed template: flocking parameters,
// current heading (whole degrees), and the neighbor list ("none" when empty;
// each neighbor's displacement to 2 decimals, heading in whole degrees).
std::string render_bird_user_prompt(int heading_deg, const FlockParams& params,
                                    const std::vector<NeighborObs>& neighbors);

std::string render_bird_user_prompt(int heading_deg, const FlockParams& params,
                                    const std::vector<NeighborObs>& neighbors,
                                    FlockUserStyle style);

// Locates the response object and extracts "new-heading" (required, numeric;
// normalized) and "rationale" (optional). Falls back to a tolerant scan when
// the object is not strict JSON (the models' rationale text often is not).
// Never throws.
ants::Parsed<BirdDecision> parse_bird_response(const std::string& text);

}  // namespace swarmsim::flocking
