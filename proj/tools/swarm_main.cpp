#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "swarmsim/format.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/runner/config.hpp"
#include "swarmsim/runner/experiment.hpp"
#include "swarmsim/runner/manifest.hpp"
#include "swarmsim/runner/summarize.hpp"
#include "swarmsim/runner/validate.hpp"
#include "swarmsim/version.hpp"

namespace {

namespace fs = std::filesystem;

// Flag > SWARM_GOLDEN_DIR > ./prompts/golden > the checkout this binary was
// built from.
std::string resolve_golden_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SWARM_GOLDEN_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  if (fs::exists("prompts/golden")) return "prompts/golden";
  return std::string(SWARMSIM_SOURCE_ROOT) + "/prompts/golden";
}

// runs/<scenario>-<config digest prefix>-<first seed>
std::string default_out_dir(const swarmsim::runner::RunConfig& cfg) {
  const std::string digest =
      swarmsim::hex64(swarmsim::fnv1a64(swarmsim::runner::canonical_config_text(cfg)));
  std::string dir = "runs/" + swarmsim::to_string(cfg.scenario) + "-" + digest.substr(0, 8);
  if (!cfg.seeds.empty()) dir += "-s" + std::to_string(cfg.seeds.front());
  return dir;
}

int run_command(const std::string& config_path, const std::string& out_flag,
                const std::optional<std::uint64_t>& seed, const std::string& mix_flag,
                const std::string& template_flag) {
  using namespace swarmsim::runner;
  RunOverrides overrides;
  overrides.seed = seed;
  if (!mix_flag.empty()) overrides.controller_mix = mix_flag;
  if (!template_flag.empty()) overrides.template_name = template_flag;
  const RunConfig cfg = finalize_config(load_config_file(config_path), overrides);
  const std::string out_dir = out_flag.empty() ? default_out_dir(cfg) : out_flag;

  const RunResult result = run_experiment(cfg, out_dir);
  std::cout << "output: " << out_dir << "\n";
  if (result.exit_code == kExitFailed) {
    std::cerr << "error: at least one seed failed: " << result.error << "\n";
  } else if (result.exit_code == kExitDegraded) {
    std::cout << "completed with " << result.degraded_ticks
              << " degraded tick(s); see manifest.json and calls.jsonl\n";
  } else {
    std::cout << "completed\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swarm foraging / flocking experiment runner"};
  app.set_version_flag("--version", std::string("swarm ") + swarmsim::kVersion + " (" +
                                        swarmsim::kGitRevision + ")");
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Execute an experiment described by a config file");
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string mix_flag;
  std::string template_flag;
  run->add_option("--config", config_path, "Config file path")->required();
  run->add_option("--seed", seed, "Run only this seed (overrides the config's seed list)");
  run->add_option("--out", out_dir, "Output directory (default: runs/<scenario>-<digest>)");
  run->add_option("--controller-mix", mix_flag,
                  "Override controller mix, e.g. rule_based:25,llm_remote:5");
  run->add_option("--template", template_flag, "Override prompt template, e.g. ants/v9");

  auto* validate =
      app.add_subcommand("validate-prompts", "Check prompt templates against the golden files");
  std::string golden_dir;
  validate->add_option("--golden-dir", golden_dir,
                       "Directory holding the golden prompt files "
                       "(default: $SWARM_GOLDEN_DIR or ./prompts/golden)");

  auto* summarize = app.add_subcommand("summarize", "Rebuild the result tables from a run directory");
  std::string in_dir;
  summarize->add_option("--in", in_dir, "Run directory (as produced by `swarm run`)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_command(config_path, out_dir, seed, mix_flag, template_flag);
    }
    if (validate->parsed()) {
      const swarmsim::runner::ValidationReport report =
          swarmsim::runner::validate_prompts(resolve_golden_dir(golden_dir));
      std::cout << report.to_text();
      return report.ok ? 0 : 1;
    }
    const swarmsim::runner::SummarizeResult result =
        swarmsim::runner::summarize_directory(in_dir);
    std::cout << result.report;
    return result.exit_code;
  } catch (const swarmsim::runner::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
