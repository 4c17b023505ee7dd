#pragma once

#include <stdexcept>
#include <string>

#include "swarmsim/ants/types.hpp"
#include "swarmsim/flocking/types.hpp"

namespace swarmsim::llm {

// Raised when the oracle cannot read a rendered prompt back. This signals a
// bug in the render/parse pair (or an incompatible template), never a runtime
// condition to fall back from.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic stand-in for the remote model: reads the rendered user-prompt
// text (directional ant styles / either flocking style) and applies the final
// prompt's decision rules. Exercises the full encode -> decode path without
// any network traffic.
ants::AntAction oracle_ant_decision(const std::string& user_prompt_text);

flocking::BirdDecision oracle_bird_decision(const std::string& user_prompt_text);

}  // namespace swarmsim::llm
