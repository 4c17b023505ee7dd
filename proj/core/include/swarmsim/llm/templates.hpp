#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swarmsim/ants/prompts.hpp"
#include "swarmsim/flocking/prompts.hpp"
#include "swarmsim/scenario.hpp"

namespace swarmsim::llm {

// A registered prompt template: versioned system text plus the user-prompt
// layout that goes with it. The deployed defaults are ants/v9 and
// flocking/v5; earlier versions ship for ablation runs only.
struct PromptTemplate {
  std::string name;  // e.g. "ants/v9"
  Scenario scenario = Scenario::kAnts;
  const char* system_text = "";
  ants::AntUserStyle ant_style = ants::AntUserStyle::kDirectionalFinal;
  flocking::FlockUserStyle flock_style = flocking::FlockUserStyle::kFinal;

  // Directional styles expose categorical cues the scripted oracle can read
  // back; the numeric styles cannot drive it.
  bool oracle_compatible() const;
};

const std::vector<PromptTemplate>& prompt_registry();

// nullptr when the name is unknown.
const PromptTemplate* find_template(std::string_view name);

const PromptTemplate& default_template(Scenario scenario);

// 64-bit content hash of the system text, hex-encoded (used by the manifest
// and the prompt validation report).
std::string template_system_hash(const PromptTemplate& tpl);

}  // namespace swarmsim::llm
