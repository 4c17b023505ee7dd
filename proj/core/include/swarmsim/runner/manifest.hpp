#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmsim/runner/config.hpp"

namespace swarmsim::runner {

struct SeedEntry {
  std::uint64_t seed = 0;
  std::string dir;                // seed output directory, relative to the run root
  std::string status;             // "running" | "ok" | "degraded" | "failed"
  long long degraded_ticks = 0;   // ticks where at least one decision fell back
  std::string error;              // failure detail when status == "failed"
};

// Provenance sidecar for a run directory. Written (status "running") before
// any seed output exists, rewritten with final statuses afterwards, so a
// half-finished directory is recognizable.
struct RunManifest {
  std::string config_digest;  // hash of canonical_config_text
  std::string code_version;
  std::string git_revision;
  std::string scenario;
  std::string template_name;
  std::string template_system_hash;
  std::string status;         // overall: worst of the seed statuses
  std::string started_at;     // ISO 8601 UTC
  std::string finished_at;    // empty while running
  std::vector<SeedEntry> seeds;
};

// Skeleton with digest/version/template fields filled and every seed entry
// in "running" state.
RunManifest make_manifest(const RunConfig& cfg);

std::string manifest_to_json(const RunManifest& m);

// Writes manifest.json into out_dir (which must exist).
void write_manifest(const std::string& out_dir, const RunManifest& m);

std::string iso8601_utc_now();

}  // namespace swarmsim::runner
