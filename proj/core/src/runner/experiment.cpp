#include "swarmsim/runner/experiment.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "swarmsim/engine/ant_sim.hpp"
#include "swarmsim/engine/flock_sim.hpp"
#include "swarmsim/format.hpp"
#include "swarmsim/llm/controllers.hpp"
#include "swarmsim/llm/templates.hpp"
#include "swarmsim/metrics/flock_stats.hpp"
#include "swarmsim/metrics/foraging.hpp"
#include "swarmsim/runner/manifest.hpp"

namespace swarmsim::runner {
namespace {

using nlohmann::ordered_json;

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

ordered_json ant_record_json(const engine::AntTickRecord& r) {
  ordered_json j;
  j["tick"] = r.tick;
  j["agent"] = r.agent_id;
  j["controller"] = r.controller_kind;
  j["perception"] = ordered_json{
      {"pheromone_dir", lower(ants::to_string(r.perception.highest_pheromone_dir))},
      {"nest", r.perception.nest_presence},
      {"nest_scent_dir", lower(ants::to_string(r.perception.stronger_nest_scent_dir))},
      {"food_here", r.perception.food_here},
      {"carrying", r.perception.carrying},
  };
  j["action"] = ordered_json{
      {"move-forward", r.action.move_forward},
      {"rotate", ants::to_string(r.action.rotate)},
      {"pick-up-food", r.action.pick_up_food},
      {"drop-pheromone", r.action.drop_pheromone},
      {"drop-food", r.action.drop_food},
  };
  j["applied"] = ordered_json{
      {"moved", r.applied.moved},
      {"rotated", r.applied.rotated},
      {"picked_up", r.applied.picked_up},
      {"dropped_pheromone", r.applied.dropped_pheromone},
      {"dropped_food", r.applied.dropped_food},
  };
  if (r.picked_patch != 0) j["picked_patch"] = r.picked_patch;
  if (r.raw_response) j["raw_response"] = *r.raw_response;
  if (r.fallback) j["fallback"] = true;
  return j;
}

ordered_json bird_record_json(const engine::BirdTickRecord& r) {
  ordered_json j;
  j["tick"] = r.tick;
  j["agent"] = r.agent_id;
  j["controller"] = r.controller_kind;
  j["heading_before"] = r.heading_before;
  j["neighbors"] = r.neighbor_count;
  j["new_heading"] = r.new_heading;
  if (r.raw_response) j["raw_response"] = *r.raw_response;
  if (r.fallback) j["fallback"] = true;
  return j;
}

ordered_json call_record_json(const llm::CallRecord& c) {
  ordered_json j;
  j["tick"] = c.tick;
  j["agent"] = c.agent_id;
  j["template"] = c.template_name;
  j["request_digest"] = c.request_digest;
  j["parse_outcome"] = c.parse_outcome;
  j["latency_ms"] = c.latency_ms;
  j["retry"] = c.retry_count;
  j["fallback"] = c.fallback;
  if (!c.raw_response.empty()) j["raw_response"] = c.raw_response;
  return j;
}

// Agent ids per analysis group; ids are assigned to mix entries in order.
struct GroupIds {
  std::vector<int> rule;  // rule_based + rule_table
  std::vector<int> llm;   // llm_remote + scripted_oracle (the substituted birds)

  std::string rule_label() const { return llm.empty() ? "netlogo" : "hybrid_rule"; }
};

GroupIds split_groups(const RunConfig& cfg) {
  GroupIds g;
  int id = 0;
  for (const ControllerGroup& grp : cfg.controller_mix) {
    const bool llm_side = grp.kind == llm::kKindRemote || grp.kind == llm::kKindOracle;
    for (int i = 0; i < grp.count; ++i, ++id) {
      (llm_side ? g.llm : g.rule).push_back(id);
    }
  }
  return g;
}

std::shared_ptr<const llm::ChatClient> make_client(const RunConfig& cfg) {
  if (!cfg.llm) return nullptr;
  return std::make_shared<const llm::ChatClient>(*cfg.llm);
}

std::vector<std::unique_ptr<llm::AntController>> build_ant_controllers(
    const RunConfig& cfg, const llm::PromptTemplate& tmpl, std::uint64_t seed,
    const std::shared_ptr<const llm::ChatClient>& client) {
  std::vector<std::unique_ptr<llm::AntController>> out;
  out.reserve(static_cast<std::size_t>(cfg.population));
  std::uint64_t id = 0;
  for (const ControllerGroup& g : cfg.controller_mix) {
    for (int i = 0; i < g.count; ++i, ++id) {
      if (g.kind == llm::kKindRuleBased) {
        out.push_back(std::make_unique<llm::RuleBasedAntController>(
            cfg.ant_params, RngStream::derive(seed, id, "policy")));
      } else if (g.kind == llm::kKindRuleTable) {
        out.push_back(std::make_unique<llm::DirectTableAntController>());
      } else if (g.kind == llm::kKindOracle) {
        out.push_back(std::make_unique<llm::OracleAntController>(tmpl));
      } else {
        out.push_back(std::make_unique<llm::RemoteAntController>(client, tmpl));
      }
    }
  }
  return out;
}

std::vector<std::unique_ptr<llm::BirdController>> build_bird_controllers(
    const RunConfig& cfg, const llm::PromptTemplate& tmpl,
    const std::shared_ptr<const llm::ChatClient>& client) {
  std::vector<std::unique_ptr<llm::BirdController>> out;
  out.reserve(static_cast<std::size_t>(cfg.population));
  for (const ControllerGroup& g : cfg.controller_mix) {
    for (int i = 0; i < g.count; ++i) {
      if (g.kind == llm::kKindRuleBased) {
        out.push_back(std::make_unique<llm::RuleBasedBirdController>(cfg.flock_params));
      } else if (g.kind == llm::kKindOracle) {
        out.push_back(std::make_unique<llm::OracleBirdController>(tmpl, cfg.flock_params));
      } else {
        out.push_back(std::make_unique<llm::RemoteBirdController>(client, tmpl,
                                                                  cfg.flock_params));
      }
    }
  }
  return out;
}

struct FlockTickRow {
  long long tick = 0;
  std::optional<metrics::HeadingDiffStats> rule_hd;
  std::optional<metrics::HeadingDiffStats> llm_hd;
  int collisions = 0;
  long long collisions_cum = 0;
  std::optional<double> rule_neighbors;
  std::optional<double> llm_neighbors;
};

struct SeedData {
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  long long degraded_ticks = 0;
  std::vector<long long> food;  // colony food after each tick
  std::vector<metrics::TripRecord> trips;
  std::vector<metrics::SearchRecord> searches;
  std::vector<FlockTickRow> flock_rows;
};

std::optional<double> group_mean(const std::vector<int>& counts, const std::vector<int>& ids) {
  if (ids.empty()) return std::nullopt;
  double sum = 0.0;
  for (int id : ids) sum += counts[static_cast<std::size_t>(id)];
  return sum / static_cast<double>(ids.size());
}

void run_ant_seed(const RunConfig& cfg, const llm::PromptTemplate& tmpl, const std::string& dir,
                  SeedData& data) {
  const auto client = make_client(cfg);
  engine::AntSimulation sim(cfg.ant_params, data.seed,
                            build_ant_controllers(cfg, tmpl, data.seed, client));
  metrics::ForagingTracker tracker(cfg.population);
  std::ofstream agents = open_out(dir + "/agents.jsonl");
  std::ofstream calls = open_out(dir + "/calls.jsonl");
  for (long long t = 1; t <= cfg.steps; ++t) {
    const std::vector<engine::AntTickRecord> records = sim.step();
    bool fell_back = false;
    for (const engine::AntTickRecord& rec : records) {
      agents << ant_record_json(rec).dump() << '\n';
      for (const llm::CallRecord& c : rec.calls) calls << call_record_json(c).dump() << '\n';
      fell_back = fell_back || rec.fallback;
    }
    tracker.observe(records);
    data.food.push_back(sim.world().colony_food());
    if (fell_back) ++data.degraded_ticks;
  }
  if (!agents || !calls) throw std::runtime_error("write failed under '" + dir + "'");
  data.trips = tracker.trips();
  data.searches = tracker.searches();
}

void run_flock_seed(const RunConfig& cfg, const llm::PromptTemplate& tmpl,
                    const GroupIds& groups, const std::string& dir, SeedData& data) {
  const auto client = make_client(cfg);
  engine::FlockSimulation sim(cfg.flock_params, data.seed,
                              build_bird_controllers(cfg, tmpl, client));
  std::ofstream birds_out = open_out(dir + "/birds.jsonl");
  std::ofstream calls = open_out(dir + "/calls.jsonl");
  std::ofstream positions = open_out(dir + "/positions.csv");
  positions << "tick,agent,x,y,heading\n";
  const auto write_positions = [&](long long tick) {
    for (const flocking::BirdState& b : sim.birds()) {
      positions << tick << ',' << b.id << ',' << format_fixed(b.pos.x, 6) << ','
                << format_fixed(b.pos.y, 6) << ',' << format_fixed(b.heading, 6) << '\n';
    }
  };
  write_positions(0);
  long long collisions_cum = 0;
  for (long long t = 1; t <= cfg.steps; ++t) {
    const std::vector<engine::BirdTickRecord> records = sim.step();
    bool fell_back = false;
    for (const engine::BirdTickRecord& rec : records) {
      birds_out << bird_record_json(rec).dump() << '\n';
      for (const llm::CallRecord& c : rec.calls) calls << call_record_json(c).dump() << '\n';
      fell_back = fell_back || rec.fallback;
    }
    if (fell_back) ++data.degraded_ticks;
    write_positions(t);

    FlockTickRow row;
    row.tick = t;
    const std::vector<flocking::BirdState>& birds = sim.birds();
    if (!groups.rule.empty()) row.rule_hd = metrics::heading_difference(birds, groups.rule);
    if (!groups.llm.empty()) row.llm_hd = metrics::heading_difference(birds, groups.llm);
    const metrics::PairwiseStats pw = metrics::pairwise_stats(birds, sim.world().torus());
    row.collisions = pw.collisions;
    collisions_cum += pw.collisions;
    row.collisions_cum = collisions_cum;
    row.rule_neighbors = group_mean(pw.neighbor_counts, groups.rule);
    row.llm_neighbors = group_mean(pw.neighbor_counts, groups.llm);
    data.flock_rows.push_back(row);
  }
  if (!birds_out || !calls || !positions) {
    throw std::runtime_error("write failed under '" + dir + "'");
  }
}

void write_ant_csvs(const std::vector<SeedData>& seeds, const std::string& out_dir) {
  std::ofstream food = open_out(out_dir + "/food.csv");
  food << "tick,run,food\n";
  for (const SeedData& s : seeds) {
    if (s.failed) continue;
    for (std::size_t i = 0; i < s.food.size(); ++i) {
      food << (i + 1) << ',' << s.seed << ',' << s.food[i] << '\n';
    }
  }
  std::ofstream trips = open_out(out_dir + "/trips.csv");
  trips << "run,agent,patch,pickup,drop\n";
  for (const SeedData& s : seeds) {
    if (s.failed) continue;
    for (const metrics::TripRecord& t : s.trips) {
      trips << s.seed << ',' << t.agent_id << ',' << t.patch_id << ',' << t.pickup_tick << ','
            << t.drop_tick << '\n';
    }
  }
  std::ofstream searches = open_out(out_dir + "/searches.csv");
  searches << "run,agent,patch,start,pickup\n";
  for (const SeedData& s : seeds) {
    if (s.failed) continue;
    for (const metrics::SearchRecord& r : s.searches) {
      searches << s.seed << ',' << r.agent_id << ',' << r.patch_id << ',' << r.start_tick << ','
               << r.pickup_tick << '\n';
    }
  }
}

std::string opt_fixed(const std::optional<double>& v) {
  return v ? format_fixed(*v, 6) : std::string("nan");
}

void write_flock_csvs(const GroupIds& groups, const std::vector<SeedData>& seeds,
                      const std::string& out_dir) {
  std::ofstream headings = open_out(out_dir + "/headings.csv");
  headings << "tick,run,group,mean,std\n";
  const std::string rule_label = groups.rule_label();
  for (const SeedData& s : seeds) {
    if (s.failed) continue;
    for (const FlockTickRow& row : s.flock_rows) {
      if (row.rule_hd) {
        headings << row.tick << ',' << s.seed << ',' << rule_label << ','
                 << format_fixed(row.rule_hd->mean, 6) << ','
                 << format_fixed(row.rule_hd->stddev, 6) << '\n';
      }
      if (row.llm_hd) {
        headings << row.tick << ',' << s.seed << ",hybrid_llm,"
                 << format_fixed(row.llm_hd->mean, 6) << ','
                 << format_fixed(row.llm_hd->stddev, 6) << '\n';
      }
    }
  }
  std::ofstream pairwise = open_out(out_dir + "/pairwise.csv");
  pairwise << "tick,run,collisions,mean_neighbors_llm,mean_neighbors_rule,collisions_cum\n";
  for (const SeedData& s : seeds) {
    if (s.failed) continue;
    for (const FlockTickRow& row : s.flock_rows) {
      pairwise << row.tick << ',' << s.seed << ',' << row.collisions << ','
               << opt_fixed(row.llm_neighbors) << ',' << opt_fixed(row.rule_neighbors) << ','
               << row.collisions_cum << '\n';
    }
  }
}

}  // namespace

std::string render_config_file(const RunConfig& cfg) {
  const auto num = [](double v) { return format_trimmed(v, 6); };
  std::string out;
  out += "scenario = " + to_string(cfg.scenario) + "\n";
  out += "steps = " + std::to_string(cfg.steps) + "\n";
  out += "population = " + std::to_string(cfg.population) + "\n";
  {
    std::string seeds;
    for (std::uint64_t s : cfg.seeds) {
      if (!seeds.empty()) seeds += ",";
      seeds += std::to_string(s);
    }
    out += "seeds = " + seeds + "\n";
  }
  out += "template = " + cfg.template_name + "\n";
  {
    std::string mix;
    for (const ControllerGroup& g : cfg.controller_mix) {
      if (!mix.empty()) mix += ",";
      mix += g.kind + ":" + std::to_string(g.count);
    }
    out += "controller_mix = " + mix + "\n";
  }
  if (cfg.scenario == Scenario::kAnts) {
    const ants::AntsParams& p = cfg.ant_params;
    out += "\n[ant_params]\n";
    out += "half_extent = " + std::to_string(p.half_extent) + "\n";
    out += "deposit = " + num(p.deposit) + "\n";
    out += "diffusion_rate = " + num(p.diffusion_rate) + "\n";
    out += "evaporation_rate = " + num(p.evaporation_rate) + "\n";
    out += "sensing_floor = " + num(p.sensing_floor) + "\n";
    out += "follow_low = " + num(p.follow_low) + "\n";
    out += "follow_high = " + num(p.follow_high) + "\n";
    out += "rotation_step_deg = " + num(p.rotation_step_deg) + "\n";
    out += "nest_radius = " + num(p.nest_radius) + "\n";
    out += "food_radius = " + num(p.food_radius) + "\n";
    out += "food_min_units = " + std::to_string(p.food_min_units) + "\n";
    out += "food_max_units = " + std::to_string(p.food_max_units) + "\n";
  } else {
    const flocking::FlockParams& p = cfg.flock_params;
    out += "\n[flock_params]\n";
    out += "max_separate_turn = " + num(p.max_separate_turn) + "\n";
    out += "max_align_turn = " + num(p.max_align_turn) + "\n";
    out += "max_cohere_turn = " + num(p.max_cohere_turn) + "\n";
    out += "minimum_separation = " + num(p.minimum_separation) + "\n";
    out += "vision = " + num(p.vision) + "\n";
    out += "speed = " + num(p.speed) + "\n";
  }
  if (cfg.llm) {
    const llm::LlmEndpointConfig& e = *cfg.llm;
    out += "\n[llm]\n";
    out += "base_url = " + e.base_url + "\n";
    out += "model = " + e.model + "\n";
    out += "temperature = " + num(e.temperature) + "\n";
    out += "max_retries = " + std::to_string(e.max_retries) + "\n";
    out += "timeout_seconds = " + num(e.timeout_seconds) + "\n";
    out += "api_key_env = " + e.api_key_env + "\n";
    out += "backoff_initial_ms = " + num(e.backoff_initial_ms) + "\n";
  }
  return out;
}

RunResult run_experiment(const RunConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const llm::PromptTemplate* tmpl = llm::find_template(cfg.template_name);
  if (tmpl == nullptr) {
    throw ConfigError("config key 'template': unknown template '" + cfg.template_name + "'");
  }

  RunManifest manifest = make_manifest(cfg);
  write_manifest(out_dir, manifest);
  open_out(out_dir + "/config.txt") << render_config_file(cfg);

  const GroupIds groups = split_groups(cfg);
  std::vector<SeedData> seeds(cfg.seeds.size());
  RunResult result;
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
    SeedData& data = seeds[i];
    data.seed = cfg.seeds[i];
    const std::string dir = out_dir + "/" + manifest.seeds[i].dir;
    try {
      fs::create_directories(dir);
      if (cfg.scenario == Scenario::kAnts) {
        run_ant_seed(cfg, *tmpl, dir, data);
      } else {
        run_flock_seed(cfg, *tmpl, groups, dir, data);
      }
    } catch (const std::exception& e) {
      data.failed = true;
      data.error = e.what();
      if (result.error.empty()) result.error = e.what();
    }
    manifest.seeds[i].status =
        data.failed ? "failed" : (data.degraded_ticks > 0 ? "degraded" : "ok");
    manifest.seeds[i].degraded_ticks = data.degraded_ticks;
    manifest.seeds[i].error = data.error;
    result.degraded_ticks += data.degraded_ticks;
  }

  if (cfg.scenario == Scenario::kAnts) {
    write_ant_csvs(seeds, out_dir);
  } else {
    write_flock_csvs(groups, seeds, out_dir);
  }

  bool any_failed = false;
  bool any_degraded = false;
  for (const SeedData& s : seeds) {
    any_failed = any_failed || s.failed;
    any_degraded = any_degraded || s.degraded_ticks > 0;
  }
  manifest.status = any_failed ? "failed" : (any_degraded ? "degraded" : "ok");
  manifest.finished_at = iso8601_utc_now();
  write_manifest(out_dir, manifest);

  result.exit_code = any_failed ? kExitFailed : (any_degraded ? kExitDegraded : kExitOk);
  return result;
}

}  // namespace swarmsim::runner
