#include "swarmsim/llm/templates.hpp"

#include "swarmsim/format.hpp"
#include "swarmsim/rng.hpp"
#include "prompt_texts.hpp"

namespace swarmsim {

std::string to_string(Scenario s) { return s == Scenario::kAnts ? "ants" : "flocking"; }

}  // namespace swarmsim

namespace swarmsim::llm {

bool PromptTemplate::oracle_compatible() const {
  if (scenario == Scenario::kFlocking) return true;
  return ant_style == ants::AntUserStyle::kDirectional ||
         ant_style == ants::AntUserStyle::kDirectionalFinal;
}

const std::vector<PromptTemplate>& prompt_registry() {
  using ants::AntUserStyle;
  using flocking::FlockUserStyle;
  static const std::vector<PromptTemplate> registry = {
      {"ants/v1", Scenario::kAnts, texts::kAntsV1System, AntUserStyle::kNumeric, {}},
      {"ants/v2", Scenario::kAnts, texts::kAntsV2System, AntUserStyle::kNumeric, {}},
      {"ants/v3", Scenario::kAnts, texts::kAntsV3System, AntUserStyle::kNumericStatus, {}},
      {"ants/v4", Scenario::kAnts, texts::kAntsV4System, AntUserStyle::kNumericStatus, {}},
      {"ants/v5", Scenario::kAnts, texts::kAntsV5System, AntUserStyle::kDirectional, {}},
      {"ants/v6", Scenario::kAnts, texts::kAntsV6System, AntUserStyle::kDirectional, {}},
      {"ants/v7", Scenario::kAnts, texts::kAntsV7System, AntUserStyle::kDirectional, {}},
      {"ants/v8", Scenario::kAnts, texts::kAntsV8System, AntUserStyle::kDirectional, {}},
      {"ants/v9", Scenario::kAnts, texts::kAntsV9System, AntUserStyle::kDirectionalFinal, {}},
      {"flocking/v1", Scenario::kFlocking, texts::kFlockingV1System, {}, FlockUserStyle::kPlain},
      {"flocking/v2", Scenario::kFlocking, texts::kFlockingV2System, {}, FlockUserStyle::kPlain},
      {"flocking/v3", Scenario::kFlocking, texts::kFlockingV3System, {}, FlockUserStyle::kPlain},
      {"flocking/v4", Scenario::kFlocking, texts::kFlockingV4System, {}, FlockUserStyle::kPlain},
      {"flocking/v5", Scenario::kFlocking, texts::kFlockingV5System, {}, FlockUserStyle::kFinal},
  };
  return registry;
}

const PromptTemplate* find_template(std::string_view name) {
  for (const PromptTemplate& t : prompt_registry()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const PromptTemplate& default_template(Scenario scenario) {
  return *find_template(scenario == Scenario::kAnts ? "ants/v9" : "flocking/v5");
}

std::string template_system_hash(const PromptTemplate& tpl) {
  return hex64(fnv1a64(tpl.system_text));
}

}  // namespace swarmsim::llm
