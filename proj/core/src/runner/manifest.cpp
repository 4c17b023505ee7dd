#include "swarmsim/runner/manifest.hpp"

#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "swarmsim/format.hpp"
#include "swarmsim/llm/templates.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/version.hpp"

namespace swarmsim::runner {

RunManifest make_manifest(const RunConfig& cfg) {
  RunManifest m;
  m.config_digest = hex64(fnv1a64(canonical_config_text(cfg)));
  m.code_version = kVersion;
  m.git_revision = kGitRevision;
  m.scenario = to_string(cfg.scenario);
  m.template_name = cfg.template_name;
  const llm::PromptTemplate* tmpl = llm::find_template(cfg.template_name);
  if (tmpl == nullptr) {
    throw ConfigError("config key 'template': unknown template '" + cfg.template_name + "'");
  }
  m.template_system_hash = llm::template_system_hash(*tmpl);
  m.status = "running";
  m.started_at = iso8601_utc_now();
  m.seeds.reserve(cfg.seeds.size());
  for (std::uint64_t s : cfg.seeds) {
    SeedEntry e;
    e.seed = s;
    e.dir = "seed-" + std::to_string(s);
    e.status = "running";
    m.seeds.push_back(std::move(e));
  }
  return m;
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["config_digest"] = m.config_digest;
  j["code_version"] = m.code_version;
  j["git_revision"] = m.git_revision;
  j["scenario"] = m.scenario;
  j["template"] = m.template_name;
  j["template_system_hash"] = m.template_system_hash;
  j["status"] = m.status;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
  for (const SeedEntry& e : m.seeds) {
    nlohmann::ordered_json s;
    s["seed"] = e.seed;
    s["dir"] = e.dir;
    s["status"] = e.status;
    s["degraded_ticks"] = e.degraded_ticks;
    if (!e.error.empty()) s["error"] = e.error;
    seeds.push_back(std::move(s));
  }
  j["seeds"] = std::move(seeds);
  return j.dump(2) + "\n";
}

void write_manifest(const std::string& out_dir, const RunManifest& m) {
  const std::string path = out_dir + "/manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
  out << manifest_to_json(m);
  if (!out) throw std::runtime_error("write failed for manifest '" + path + "'");
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace swarmsim::runner
