#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "swarmsim/format.hpp"
#include "swarmsim/llm/endpoint.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/runner/config.hpp"
#include "swarmsim/runner/experiment.hpp"
#include "swarmsim/runner/manifest.hpp"
#include "swarmsim/runner/summarize.hpp"
#include "swarmsim/runner/validate.hpp"
#include "test_util.hpp"

using namespace swarmsim;
using namespace swarmsim::runner;

namespace {

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

std::vector<nlohmann::json> read_jsonl(const std::string& path) {
  std::vector<nlohmann::json> out;
  std::istringstream in(testutil::read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

RunConfig tiny_ants_config() {
  RunConfig cfg;
  cfg.scenario = Scenario::kAnts;
  cfg.scenario_set = true;
  cfg.population = 4;
  cfg.steps = 30;
  cfg.seeds = {1, 2};
  return finalize_config(cfg, {});
}

}  // namespace

TEST_CASE("config text parses sections, comments and whitespace") {
  const std::string text =
      "# experiment\n"
      "scenario = flocking\n"
      "steps=50\n"
      "  population =  8 \n"
      "seeds = 3, 5 ,8\n"
      "template = flocking/v5\n"
      "controller_mix = scripted_oracle:3, rule_based:5\n"
      "\n"
      "[flock_params]\n"
      "vision = 7.5\n"
      "minimum_separation = 2\n";
  const RunConfig cfg = parse_config_text(text);
  CHECK(cfg.scenario == Scenario::kFlocking);
  CHECK(cfg.scenario_set);
  CHECK(cfg.steps == 50);
  CHECK(cfg.population == 8);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{3, 5, 8});
  CHECK(cfg.template_name == "flocking/v5");
  REQUIRE(cfg.controller_mix.size() == 2);
  CHECK(cfg.controller_mix[0].kind == "scripted_oracle");
  CHECK(cfg.controller_mix[0].count == 3);
  CHECK(cfg.controller_mix[1].kind == "rule_based");
  CHECK(cfg.controller_mix[1].count == 5);
  CHECK(cfg.flock_params.vision == 7.5);
  CHECK(cfg.flock_params.minimum_separation == 2.0);
  CHECK_FALSE(cfg.llm.has_value());

  const RunConfig ants = parse_config_text("[ant_params]\ndeposit = 80\nhalf_extent = 20\n");
  CHECK(ants.ant_params.deposit == 80.0);
  CHECK(ants.ant_params.half_extent == 20);
  CHECK_FALSE(ants.scenario_set);
}

TEST_CASE("config errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_config_text("mystery = 1\n"), "unknown config key 'mystery'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("[bogus]\n"), "unknown config section '[bogus]'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("just words\n"),
                       "malformed config line 'just words' (expected key = value)", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("[llm\n"), "malformed section header '[llm'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("scenario = birds\n"),
                       "config key 'scenario': expected ants or flocking, got 'birds'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("steps = ten\n"),
                       "config key 'steps': expected integer, got 'ten'", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("seeds = -1\n"),
                       "config key 'seeds': expected unsigned integer, got '-1'", ConfigError);
  CHECK_THROWS_AS(parse_config_text("[ant_params]\nwarp = 9\n"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/path/run.cfg"), ConfigError);
}

TEST_CASE("controller mix strings are validated") {
  const auto mix = parse_controller_mix("rule_based:5,llm_remote:5");
  REQUIRE(mix.size() == 2);
  CHECK(mix[0].kind == "rule_based");
  CHECK(mix[1].kind == "llm_remote");
  CHECK(mix[1].count == 5);

  CHECK_THROWS_WITH_AS(parse_controller_mix("magic:3"),
                       "config key 'controller_mix': unknown controller kind 'magic'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_controller_mix("rule_based:0"),
                       "config key 'controller_mix': count must be positive in 'rule_based:0'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_controller_mix("rule_based"),
                       "config key 'controller_mix': expected kind:count, got 'rule_based'",
                       ConfigError);
}

TEST_CASE("finalize fills scenario defaults") {
  SUBCASE("ants") {
    const RunConfig cfg = finalize_config({}, {});
    CHECK(cfg.scenario == Scenario::kAnts);
    CHECK(cfg.population == 10);
    CHECK(cfg.steps == 1000);
    CHECK(cfg.template_name == "ants/v9");
    CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    REQUIRE(cfg.controller_mix.size() == 1);
    CHECK(cfg.controller_mix[0].kind == "rule_based");
    CHECK(cfg.controller_mix[0].count == 10);
  }
  SUBCASE("flocking") {
    RunConfig in;
    in.scenario = Scenario::kFlocking;
    const RunConfig cfg = finalize_config(in, {});
    CHECK(cfg.population == 30);
    CHECK(cfg.steps == 800);
    CHECK(cfg.template_name == "flocking/v5");
    CHECK(cfg.controller_mix[0].count == 30);
  }
}

TEST_CASE("overrides beat the file values") {
  RunConfig in;
  in.population = 10;
  in.seeds = {1, 2, 3};
  RunOverrides ov;
  ov.seed = 42;
  ov.controller_mix = "rule_table:4,rule_based:6";
  ov.template_name = "ants/v5";
  const RunConfig cfg = finalize_config(in, ov);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{42});
  CHECK(cfg.template_name == "ants/v5");
  REQUIRE(cfg.controller_mix.size() == 2);
  CHECK(cfg.controller_mix[0].kind == "rule_table");
}

TEST_CASE("finalize enforces the cross-field rules") {
  RunConfig base;
  base.population = 10;

  {
    RunConfig cfg = base;
    cfg.controller_mix = {{"rule_based", 3}};
    CHECK_THROWS_WITH_AS(finalize_config(cfg, {}),
                         "config key 'controller_mix': counts sum to 3 but population is 10",
                         ConfigError);
  }
  {
    RunConfig cfg = base;
    cfg.template_name = "ants/v42";
    CHECK_THROWS_WITH_AS(finalize_config(cfg, {}),
                         "config key 'template': unknown template 'ants/v42'", ConfigError);
  }
  {
    RunConfig cfg = base;
    cfg.template_name = "flocking/v5";
    CHECK_THROWS_WITH_AS(finalize_config(cfg, {}),
                         "config key 'template': 'flocking/v5' does not fit scenario 'ants'",
                         ConfigError);
  }
  {
    RunConfig cfg = base;
    cfg.template_name = "ants/v1";
    cfg.controller_mix = {{"scripted_oracle", 10}};
    CHECK_THROWS_AS(finalize_config(cfg, {}), ConfigError);
  }
  {
    RunConfig cfg = base;
    cfg.controller_mix = {{"llm_remote", 10}};
    CHECK_THROWS_WITH_AS(finalize_config(cfg, {}),
                         "config section '[llm]': required when controller_mix contains llm_remote",
                         ConfigError);
  }
  {
    RunConfig cfg = base;
    cfg.llm.emplace();
    CHECK_THROWS_WITH_AS(
        finalize_config(cfg, {}),
        "config section '[llm]': present but controller_mix has no llm_remote entry", ConfigError);
  }
  {
    RunConfig cfg;
    cfg.scenario = Scenario::kFlocking;
    cfg.population = 10;
    cfg.controller_mix = {{"rule_table", 10}};
    CHECK_THROWS_WITH_AS(finalize_config(cfg, {}),
                         "config key 'controller_mix': rule_table is an ants-only controller kind",
                         ConfigError);
  }
  {
    RunConfig cfg;
    cfg.scenario = Scenario::kFlocking;
    cfg.flock_params.minimum_separation = 5.0;  // == vision
    CHECK_THROWS_AS(finalize_config(cfg, {}), ConfigError);
  }
  {
    RunConfig cfg = base;
    cfg.ant_params.diffusion_rate = 1.5;
    CHECK_THROWS_AS(finalize_config(cfg, {}), ConfigError);
  }
}

TEST_CASE("llm base_url defaults respect the environment") {
  RunConfig cfg;
  cfg.population = 2;
  cfg.controller_mix = {{"rule_based", 1}, {"llm_remote", 1}};
  cfg.llm.emplace();
  cfg.llm->base_url.clear();  // as the section parser leaves it

  setenv("SWARM_LLM_BASE_URL", "http://stub.test/v1", 1);
  CHECK(finalize_config(cfg, {}).llm->base_url == "http://stub.test/v1");
  unsetenv("SWARM_LLM_BASE_URL");
  CHECK(finalize_config(cfg, {}).llm->base_url == "https://api.openai.com/v1");

  cfg.llm->base_url = "http://explicit.test/v1";
  setenv("SWARM_LLM_BASE_URL", "http://stub.test/v1", 1);
  CHECK(finalize_config(cfg, {}).llm->base_url == "http://explicit.test/v1");
  unsetenv("SWARM_LLM_BASE_URL");
}

TEST_CASE("canonical text is stable under reordering and feeds the digest") {
  const RunConfig ca = finalize_config(
      parse_config_text("steps = 100\npopulation = 4\nscenario = ants\nseeds = 9\n"
                        "[ant_params]\ndeposit = 70\nnest_radius = 4\n"),
      {});
  const RunConfig cb = finalize_config(
      parse_config_text("seeds = 9\nscenario = ants\npopulation = 4\nsteps = 100\n"
                        "[ant_params]\nnest_radius = 4\ndeposit = 70\n"),
      {});
  CHECK(canonical_config_text(ca) == canonical_config_text(cb));

  // Sorted, newline-terminated key=value lines.
  const std::string text = canonical_config_text(ca);
  CHECK(text.find("scenario=ants\n") != std::string::npos);
  CHECK(text.find("ant_params.deposit=70.000000\n") != std::string::npos);
  CHECK(text.find("llm.") == std::string::npos);
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("rendered config files load back to the same run") {
  RunConfig cfg;
  cfg.scenario = Scenario::kFlocking;
  cfg.scenario_set = true;
  cfg.population = 6;
  cfg.steps = 40;
  cfg.seeds = {11, 12};
  cfg.controller_mix = {{"scripted_oracle", 2}, {"rule_based", 4}};
  cfg.flock_params.vision = 6.0;
  const RunConfig finalized = finalize_config(cfg, {});

  testutil::TempDir tmp("render");
  const std::string path = tmp.sub("run.cfg");
  std::ofstream(path, std::ios::binary) << render_config_file(finalized);

  const RunConfig reloaded = finalize_config(load_config_file(path), {});
  CHECK(canonical_config_text(reloaded) == canonical_config_text(finalized));
}

TEST_CASE("manifest json carries provenance and seed states") {
  const RunConfig cfg = tiny_ants_config();
  const RunManifest m = make_manifest(cfg);
  CHECK(m.config_digest.size() == 16);
  CHECK(m.status == "running");
  CHECK(m.scenario == "ants");
  CHECK(m.template_name == "ants/v9");
  REQUIRE(m.seeds.size() == 2);
  CHECK(m.seeds[0].dir == "seed-1");
  CHECK(m.seeds[1].dir == "seed-2");

  const nlohmann::json j = nlohmann::json::parse(manifest_to_json(m));
  CHECK(j.at("config_digest") == m.config_digest);
  CHECK(j.at("template_system_hash").get<std::string>().size() == 16);
  CHECK(j.at("seeds").size() == 2);
  CHECK(j["seeds"][0].at("status") == "running");
}

TEST_CASE("prompt validation passes against the bundled golden files") {
  const ValidationReport report = validate_prompts(testutil::golden_path(""));
  CHECK(report.ok);
  CHECK(report.items.size() >= 6);
  int checked = 0;
  for (const ValidationItem& item : report.items) {
    if (item.checked) {
      ++checked;
      CHECK_MESSAGE(item.ok, item.name << ": " << item.detail);
    }
  }
  CHECK(checked >= 6);
  CHECK_FALSE(report.to_text().empty());

  testutil::TempDir tmp("no-golden");
  CHECK_THROWS_AS(validate_prompts(tmp.path()), ConfigError);
}

TEST_CASE("ant experiments produce the documented directory layout") {
  const RunConfig cfg = tiny_ants_config();
  testutil::TempDir tmp("ants-run");
  const RunResult result = run_experiment(cfg, tmp.path());
  CHECK(result.exit_code == kExitOk);
  CHECK(result.degraded_ticks == 0);
  CHECK(result.error.empty());

  const std::string food = testutil::read_file(tmp.sub("food.csv"));
  CHECK(line_count(food) == 1 + 2 * 30);  // header + ticks x seeds
  CHECK(food.rfind("tick,run,food\n", 0) == 0);
  CHECK(testutil::read_file(tmp.sub("trips.csv")).rfind("run,agent,patch,pickup,drop\n", 0) == 0);
  CHECK(testutil::read_file(tmp.sub("searches.csv")).rfind("run,agent,patch,start,pickup\n", 0) ==
        0);
  CHECK_FALSE(testutil::read_file(tmp.sub("config.txt")).empty());

  const auto agents = read_jsonl(tmp.sub("seed-1/agents.jsonl"));
  REQUIRE(agents.size() == 4 * 30);
  CHECK(agents[0].at("tick") == 1);
  CHECK(agents[0].at("controller") == "rule_based");
  CHECK(agents[0].at("perception").at("nest") == true);
  CHECK(agents[0].at("action").contains("move-forward"));
  CHECK(agents[0].at("applied").contains("moved"));
  CHECK(read_jsonl(tmp.sub("seed-1/calls.jsonl")).empty());  // no remote decisions

  const nlohmann::json manifest = nlohmann::json::parse(testutil::read_file(tmp.sub("manifest.json")));
  CHECK(manifest.at("status") == "ok");
  CHECK_FALSE(manifest.at("finished_at").get<std::string>().empty());
  CHECK(manifest.at("seeds").size() == 2);
  CHECK(manifest["seeds"][0].at("status") == "ok");
  CHECK(manifest["seeds"][0].at("degraded_ticks") == 0);

  // The written config reproduces the run's canonical form.
  const RunConfig reloaded = finalize_config(load_config_file(tmp.sub("config.txt")), {});
  CHECK(manifest.at("config_digest") == hex64(fnv1a64(canonical_config_text(reloaded))));

  SUBCASE("summaries rebuild from the artifacts") {
    const SummarizeResult s = summarize_directory(tmp.path());
    CHECK(s.exit_code == 0);
    CHECK_FALSE(s.report.empty());
    CHECK_FALSE(testutil::read_file(tmp.sub("summary.csv")).empty());
  }
}

TEST_CASE("runs are byte-for-byte reproducible") {
  SUBCASE("ants") {
    const RunConfig cfg = tiny_ants_config();
    testutil::TempDir a("repro-a");
    testutil::TempDir b("repro-b");
    REQUIRE(run_experiment(cfg, a.path()).exit_code == kExitOk);
    REQUIRE(run_experiment(cfg, b.path()).exit_code == kExitOk);
    for (const char* name : {"food.csv", "trips.csv", "searches.csv", "config.txt",
                             "seed-1/agents.jsonl", "seed-2/agents.jsonl"}) {
      CHECK_MESSAGE(testutil::read_file(a.sub(name)) == testutil::read_file(b.sub(name)), name);
    }
  }
  SUBCASE("flocking with oracle substitutes") {
    RunConfig cfg;
    cfg.scenario = Scenario::kFlocking;
    cfg.scenario_set = true;
    cfg.population = 6;
    cfg.steps = 20;
    cfg.seeds = {7};
    cfg.controller_mix = {{"scripted_oracle", 2}, {"rule_based", 4}};
    const RunConfig finalized = finalize_config(cfg, {});

    testutil::TempDir a("repro-fa");
    testutil::TempDir b("repro-fb");
    REQUIRE(run_experiment(finalized, a.path()).exit_code == kExitOk);
    REQUIRE(run_experiment(finalized, b.path()).exit_code == kExitOk);
    for (const char* name : {"pairwise.csv", "headings.csv", "seed-7/birds.jsonl",
                             "seed-7/positions.csv"}) {
      CHECK_MESSAGE(testutil::read_file(a.sub(name)) == testutil::read_file(b.sub(name)), name);
    }

    const std::string positions = testutil::read_file(a.sub("seed-7/positions.csv"));
    CHECK(line_count(positions) == 1 + 6 * 21);  // header + population x (initial + steps)
    const std::string headings = testutil::read_file(a.sub("headings.csv"));
    CHECK(headings.find("hybrid_rule") != std::string::npos);
    CHECK(headings.find("hybrid_llm") != std::string::npos);
    const std::string pairwise = testutil::read_file(a.sub("pairwise.csv"));
    CHECK(pairwise.rfind("tick,run,collisions,mean_neighbors_llm,mean_neighbors_rule,collisions_cum\n",
                         0) == 0);
  }
}

TEST_CASE("netlogo-only flocking runs label the rule group accordingly") {
  RunConfig cfg;
  cfg.scenario = Scenario::kFlocking;
  cfg.scenario_set = true;
  cfg.population = 5;
  cfg.steps = 10;
  cfg.seeds = {3};
  const RunConfig finalized = finalize_config(cfg, {});
  testutil::TempDir tmp("netlogo-flock");
  REQUIRE(run_experiment(finalized, tmp.path()).exit_code == kExitOk);
  const std::string headings = testutil::read_file(tmp.sub("headings.csv"));
  CHECK(headings.find("netlogo") != std::string::npos);
  CHECK(headings.find("hybrid") == std::string::npos);
}

TEST_CASE("remote decisions that cannot be made degrade the run") {
  RunConfig cfg;
  cfg.scenario = Scenario::kAnts;
  cfg.scenario_set = true;
  cfg.population = 2;
  cfg.steps = 5;
  cfg.seeds = {3};
  cfg.controller_mix = {{"rule_based", 1}, {"llm_remote", 1}};
  cfg.llm.emplace();
  cfg.llm->base_url = "http://127.0.0.1:9/v1";  // never contacted: the key is missing
  cfg.llm->api_key_env = "SWARM_TEST_KEY_THAT_IS_NOT_SET";
  cfg.llm->max_retries = 0;
  cfg.llm->backoff_initial_ms = 0.0;
  unsetenv("SWARM_TEST_KEY_THAT_IS_NOT_SET");
  const RunConfig finalized = finalize_config(cfg, {});

  testutil::TempDir tmp("degraded");
  const RunResult result = run_experiment(finalized, tmp.path());
  CHECK(result.exit_code == kExitDegraded);
  CHECK(result.degraded_ticks == 5);

  const nlohmann::json manifest = nlohmann::json::parse(testutil::read_file(tmp.sub("manifest.json")));
  CHECK(manifest.at("status") == "degraded");
  CHECK(manifest["seeds"][0].at("status") == "degraded");
  CHECK(manifest["seeds"][0].at("degraded_ticks") == 5);

  const auto calls = read_jsonl(tmp.sub("seed-3/calls.jsonl"));
  REQUIRE(calls.size() == 5);  // one config-error record per tick for the remote ant
  for (const nlohmann::json& c : calls) {
    CHECK(c.at("parse_outcome") == "config_error");
    CHECK(c.at("fallback") == true);
    CHECK(c.at("agent") == 1);
  }

  int fallback_records = 0;
  for (const nlohmann::json& rec : read_jsonl(tmp.sub("seed-3/agents.jsonl"))) {
    if (rec.value("fallback", false)) {
      ++fallback_records;
      CHECK(rec.at("agent") == 1);
      CHECK(rec.at("action").at("rotate") == "random");
    }
  }
  CHECK(fallback_records == 5);
}

TEST_CASE("summarize refuses a directory without run data") {
  testutil::TempDir tmp("empty");
  CHECK_THROWS_AS(summarize_directory(tmp.path()), ConfigError);
}
