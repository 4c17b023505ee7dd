#include "swarmsim/runner/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "swarmsim/format.hpp"
#include "swarmsim/llm/controllers.hpp"
#include "swarmsim/llm/templates.hpp"

namespace swarmsim::runner {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_ll(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("config key '" + key + "': expected integer, got '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  return static_cast<int>(parse_ll(key, value));
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos) {
    throw ConfigError("config key '" + key + "': expected unsigned integer, got '" + value + "'");
  }
  return static_cast<std::uint64_t>(v);
}

double parse_num(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("config key '" + key + "': expected number, got '" + value + "'");
  }
  return v;
}

bool known_controller_kind(const std::string& kind) {
  return kind == llm::kKindRuleBased || kind == llm::kKindOracle || kind == llm::kKindRemote ||
         kind == llm::kKindRuleTable;
}

void apply_top_level(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    if (value == "ants") {
      cfg.scenario = Scenario::kAnts;
    } else if (value == "flocking") {
      cfg.scenario = Scenario::kFlocking;
    } else {
      throw ConfigError("config key 'scenario': expected ants or flocking, got '" + value + "'");
    }
    cfg.scenario_set = true;
  } else if (key == "steps") {
    cfg.steps = parse_ll(key, value);
  } else if (key == "population") {
    cfg.population = parse_int(key, value);
  } else if (key == "seeds") {
    cfg.seeds.clear();
    for (const std::string& part : split(value, ',')) {
      const std::string t = trim(part);
      if (t.empty()) throw ConfigError("config key 'seeds': empty entry in '" + value + "'");
      cfg.seeds.push_back(parse_u64(key, t));
    }
  } else if (key == "template") {
    cfg.template_name = value;
  } else if (key == "controller_mix") {
    cfg.controller_mix = parse_controller_mix(value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_ant_param(ants::AntsParams& p, const std::string& key, const std::string& value) {
  const std::string full = "ant_params." + key;
  if (key == "half_extent") p.half_extent = parse_int(full, value);
  else if (key == "deposit") p.deposit = parse_num(full, value);
  else if (key == "diffusion_rate") p.diffusion_rate = parse_num(full, value);
  else if (key == "evaporation_rate") p.evaporation_rate = parse_num(full, value);
  else if (key == "sensing_floor") p.sensing_floor = parse_num(full, value);
  else if (key == "follow_low") p.follow_low = parse_num(full, value);
  else if (key == "follow_high") p.follow_high = parse_num(full, value);
  else if (key == "rotation_step_deg") p.rotation_step_deg = parse_num(full, value);
  else if (key == "nest_radius") p.nest_radius = parse_num(full, value);
  else if (key == "food_radius") p.food_radius = parse_num(full, value);
  else if (key == "food_min_units") p.food_min_units = parse_int(full, value);
  else if (key == "food_max_units") p.food_max_units = parse_int(full, value);
  else throw ConfigError("unknown config key '" + full + "'");
}

void apply_flock_param(flocking::FlockParams& p, const std::string& key,
                       const std::string& value) {
  const std::string full = "flock_params." + key;
  if (key == "max_separate_turn") p.max_separate_turn = parse_num(full, value);
  else if (key == "max_align_turn") p.max_align_turn = parse_num(full, value);
  else if (key == "max_cohere_turn") p.max_cohere_turn = parse_num(full, value);
  else if (key == "minimum_separation") p.minimum_separation = parse_num(full, value);
  else if (key == "vision") p.vision = parse_num(full, value);
  else if (key == "speed") p.speed = parse_num(full, value);
  else throw ConfigError("unknown config key '" + full + "'");
}

void apply_llm_param(llm::LlmEndpointConfig& e, const std::string& key,
                     const std::string& value) {
  const std::string full = "llm." + key;
  if (key == "base_url") e.base_url = value;
  else if (key == "model") e.model = value;
  else if (key == "temperature") e.temperature = parse_num(full, value);
  else if (key == "max_retries") e.max_retries = parse_int(full, value);
  else if (key == "timeout_seconds") e.timeout_seconds = parse_num(full, value);
  else if (key == "api_key_env") e.api_key_env = value;
  else if (key == "backoff_initial_ms") e.backoff_initial_ms = parse_num(full, value);
  else throw ConfigError("unknown config key '" + full + "'");
}

void require(bool cond, const std::string& message) {
  if (!cond) throw ConfigError(message);
}

}  // namespace

std::vector<ControllerGroup> parse_controller_mix(const std::string& text) {
  std::vector<ControllerGroup> mix;
  for (const std::string& part : split(text, ',')) {
    const std::string entry = trim(part);
    if (entry.empty()) {
      throw ConfigError("config key 'controller_mix': empty entry in '" + text + "'");
    }
    const std::size_t colon = entry.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("config key 'controller_mix': expected kind:count, got '" + entry + "'");
    }
    ControllerGroup g;
    g.kind = trim(entry.substr(0, colon));
    if (!known_controller_kind(g.kind)) {
      throw ConfigError("config key 'controller_mix': unknown controller kind '" + g.kind + "'");
    }
    g.count = parse_int("controller_mix", trim(entry.substr(colon + 1)));
    if (g.count <= 0) {
      throw ConfigError("config key 'controller_mix': count must be positive in '" + entry + "'");
    }
    mix.push_back(std::move(g));
  }
  return mix;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "ant_params" && section != "flock_params" && section != "llm") {
        throw ConfigError("unknown config section '[" + section + "]'");
      }
      if (section == "llm" && !cfg.llm) {
        cfg.llm.emplace();
        cfg.llm->base_url.clear();  // distinguish "unset" from the built-in default
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("malformed config line '" + line + "' (expected key = value)");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("malformed config line '" + line + "' (empty key)");
    if (section.empty()) {
      apply_top_level(cfg, key, value);
    } else if (section == "ant_params") {
      apply_ant_param(cfg.ant_params, key, value);
    } else if (section == "flock_params") {
      apply_flock_param(cfg.flock_params, key, value);
    } else {
      apply_llm_param(*cfg.llm, key, value);
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig finalize_config(RunConfig cfg, const RunOverrides& overrides) {
  if (overrides.template_name) cfg.template_name = *overrides.template_name;
  if (overrides.controller_mix) cfg.controller_mix = parse_controller_mix(*overrides.controller_mix);
  if (overrides.seed) cfg.seeds = {*overrides.seed};

  const bool ants_scenario = cfg.scenario == Scenario::kAnts;
  if (cfg.population == 0) cfg.population = ants_scenario ? 10 : 30;
  if (cfg.steps == 0) cfg.steps = ants_scenario ? 1000 : 800;
  if (cfg.template_name.empty()) cfg.template_name = llm::default_template(cfg.scenario).name;
  if (cfg.seeds.empty()) cfg.seeds = {1, 2, 3, 4, 5};
  if (cfg.controller_mix.empty()) {
    cfg.controller_mix = {{std::string(llm::kKindRuleBased), cfg.population}};
  }

  require(cfg.steps > 0, "config key 'steps': must be positive");
  require(cfg.population > 0, "config key 'population': must be positive");

  int mix_total = 0;
  bool any_remote = false;
  bool any_oracle = false;
  bool any_table = false;
  for (const ControllerGroup& g : cfg.controller_mix) {
    mix_total += g.count;
    any_remote = any_remote || g.kind == llm::kKindRemote;
    any_oracle = any_oracle || g.kind == llm::kKindOracle;
    any_table = any_table || g.kind == llm::kKindRuleTable;
  }
  require(!any_table || ants_scenario,
          "config key 'controller_mix': rule_table is an ants-only controller kind");
  require(mix_total == cfg.population,
          "config key 'controller_mix': counts sum to " + std::to_string(mix_total) +
              " but population is " + std::to_string(cfg.population));

  const llm::PromptTemplate* tmpl = llm::find_template(cfg.template_name);
  if (tmpl == nullptr) {
    throw ConfigError("config key 'template': unknown template '" + cfg.template_name + "'");
  }
  require(tmpl->scenario == cfg.scenario,
          "config key 'template': '" + cfg.template_name + "' does not fit scenario '" +
              to_string(cfg.scenario) + "'");
  if (any_oracle) {
    require(tmpl->oracle_compatible(),
            "config key 'controller_mix': scripted_oracle needs a directional-cue template, "
            "but '" + cfg.template_name + "' renders numeric readings");
  }

  require(!any_remote || cfg.llm.has_value(),
          "config section '[llm]': required when controller_mix contains llm_remote");
  require(any_remote || !cfg.llm.has_value(),
          "config section '[llm]': present but controller_mix has no llm_remote entry");
  if (cfg.llm && cfg.llm->base_url.empty()) cfg.llm->base_url = llm::default_base_url();
  if (cfg.llm) {
    require(cfg.llm->max_retries >= 0, "config key 'llm.max_retries': must be >= 0");
    require(cfg.llm->timeout_seconds > 0, "config key 'llm.timeout_seconds': must be positive");
    require(!cfg.llm->model.empty(), "config key 'llm.model': must not be empty");
    require(!cfg.llm->api_key_env.empty(), "config key 'llm.api_key_env': must not be empty");
  }

  if (ants_scenario) {
    const ants::AntsParams& p = cfg.ant_params;
    require(p.half_extent > 0, "config key 'ant_params.half_extent': must be positive");
    require(p.diffusion_rate >= 0 && p.diffusion_rate <= 1,
            "config key 'ant_params.diffusion_rate': must be in [0, 1]");
    require(p.evaporation_rate >= 0 && p.evaporation_rate <= 1,
            "config key 'ant_params.evaporation_rate': must be in [0, 1]");
    require(p.sensing_floor >= 0, "config key 'ant_params.sensing_floor': must be >= 0");
    require(p.follow_low <= p.follow_high,
            "config key 'ant_params.follow_low': must not exceed follow_high");
    require(p.rotation_step_deg > 0, "config key 'ant_params.rotation_step_deg': must be positive");
    require(p.nest_radius > 0, "config key 'ant_params.nest_radius': must be positive");
    require(p.food_radius > 0, "config key 'ant_params.food_radius': must be positive");
    require(p.food_min_units >= 0, "config key 'ant_params.food_min_units': must be >= 0");
    require(p.food_max_units >= p.food_min_units,
            "config key 'ant_params.food_max_units': must be >= food_min_units");
  } else {
    const flocking::FlockParams& p = cfg.flock_params;
    require(p.max_separate_turn >= 0, "config key 'flock_params.max_separate_turn': must be >= 0");
    require(p.max_align_turn >= 0, "config key 'flock_params.max_align_turn': must be >= 0");
    require(p.max_cohere_turn >= 0, "config key 'flock_params.max_cohere_turn': must be >= 0");
    require(p.speed > 0, "config key 'flock_params.speed': must be positive");
    require(p.vision > 0, "config key 'flock_params.vision': must be positive");
    require(p.minimum_separation > 0 && p.minimum_separation < p.vision,
            "config key 'flock_params.minimum_separation': must be positive and below vision");
  }
  return cfg;
}

std::string canonical_config_text(const RunConfig& cfg) {
  std::vector<std::string> lines;
  const auto num = [](double v) { return format_fixed(v, 6); };

  lines.push_back("scenario=" + to_string(cfg.scenario));
  lines.push_back("steps=" + std::to_string(cfg.steps));
  lines.push_back("population=" + std::to_string(cfg.population));
  lines.push_back("template=" + cfg.template_name);
  {
    std::string mix;
    for (const ControllerGroup& g : cfg.controller_mix) {
      if (!mix.empty()) mix += ",";
      mix += g.kind + ":" + std::to_string(g.count);
    }
    lines.push_back("controller_mix=" + mix);
  }
  {
    std::string seeds;
    for (std::uint64_t s : cfg.seeds) {
      if (!seeds.empty()) seeds += ",";
      seeds += std::to_string(s);
    }
    lines.push_back("seeds=" + seeds);
  }
  if (cfg.scenario == Scenario::kAnts) {
    const ants::AntsParams& p = cfg.ant_params;
    lines.push_back("ant_params.half_extent=" + std::to_string(p.half_extent));
    lines.push_back("ant_params.deposit=" + num(p.deposit));
    lines.push_back("ant_params.diffusion_rate=" + num(p.diffusion_rate));
    lines.push_back("ant_params.evaporation_rate=" + num(p.evaporation_rate));
    lines.push_back("ant_params.sensing_floor=" + num(p.sensing_floor));
    lines.push_back("ant_params.follow_low=" + num(p.follow_low));
    lines.push_back("ant_params.follow_high=" + num(p.follow_high));
    lines.push_back("ant_params.rotation_step_deg=" + num(p.rotation_step_deg));
    lines.push_back("ant_params.nest_radius=" + num(p.nest_radius));
    lines.push_back("ant_params.food_radius=" + num(p.food_radius));
    lines.push_back("ant_params.food_min_units=" + std::to_string(p.food_min_units));
    lines.push_back("ant_params.food_max_units=" + std::to_string(p.food_max_units));
  } else {
    const flocking::FlockParams& p = cfg.flock_params;
    lines.push_back("flock_params.max_separate_turn=" + num(p.max_separate_turn));
    lines.push_back("flock_params.max_align_turn=" + num(p.max_align_turn));
    lines.push_back("flock_params.max_cohere_turn=" + num(p.max_cohere_turn));
    lines.push_back("flock_params.minimum_separation=" + num(p.minimum_separation));
    lines.push_back("flock_params.vision=" + num(p.vision));
    lines.push_back("flock_params.speed=" + num(p.speed));
  }
  if (cfg.llm) {
    const llm::LlmEndpointConfig& e = *cfg.llm;
    lines.push_back("llm.base_url=" + e.base_url);
    lines.push_back("llm.model=" + e.model);
    lines.push_back("llm.temperature=" + num(e.temperature));
    lines.push_back("llm.max_retries=" + std::to_string(e.max_retries));
    lines.push_back("llm.timeout_seconds=" + num(e.timeout_seconds));
    lines.push_back("llm.api_key_env=" + e.api_key_env);
    lines.push_back("llm.backoff_initial_ms=" + num(e.backoff_initial_ms));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace swarmsim::runner
