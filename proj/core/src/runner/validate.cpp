#include "swarmsim/runner/validate.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "swarmsim/ants/prompts.hpp"
#include "swarmsim/flocking/prompts.hpp"
#include "swarmsim/llm/templates.hpp"
#include "swarmsim/runner/config.hpp"

namespace swarmsim::runner {
namespace {

std::string read_golden(const std::string& dir, const std::string& file) {
  const std::string path = dir + "/" + file;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("missing golden file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string byte_repr(char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02x", static_cast<unsigned char>(c));
  return buf;
}

// "matches (N bytes)" or the position and value of the first difference.
ValidationItem compare_bytes(const std::string& name, const std::string& got,
                             const std::string& want) {
  ValidationItem item;
  item.name = name;
  if (got == want) {
    item.ok = true;
    item.detail = "matches golden (" + std::to_string(want.size()) + " bytes)";
    return item;
  }
  item.ok = false;
  const std::size_t n = std::min(got.size(), want.size());
  std::size_t i = 0;
  while (i < n && got[i] == want[i]) ++i;
  if (i < n) {
    item.detail = "differs at byte " + std::to_string(i) + ": got " + byte_repr(got[i]) +
                  ", want " + byte_repr(want[i]);
  } else {
    item.detail = "length " + std::to_string(got.size()) + ", golden has " +
                  std::to_string(want.size()) + " bytes";
  }
  return item;
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::string out;
  std::size_t checked = 0;
  std::size_t passed = 0;
  for (const ValidationItem& item : items) {
    if (item.checked) {
      ++checked;
      if (item.ok) ++passed;
      out += item.ok ? "PASS  " : "FAIL  ";
    } else {
      out += "INFO  ";
    }
    out += item.name + " - " + item.detail + "\n";
  }
  out += std::to_string(passed) + "/" + std::to_string(checked) + " checks passed\n";
  return out;
}

ValidationReport validate_prompts(const std::string& golden_dir) {
  ValidationReport report;
  const llm::PromptTemplate* ants_tpl = llm::find_template("ants/v9");
  const llm::PromptTemplate* flock_tpl = llm::find_template("flocking/v5");
  if (ants_tpl == nullptr || flock_tpl == nullptr) {
    throw ConfigError("prompt registry is missing a deployed template");
  }

  report.items.push_back(compare_bytes("ants/v9 system text", ants_tpl->system_text,
                                       read_golden(golden_dir, "ants_v9_system.txt")));
  report.items.push_back(compare_bytes("flocking/v5 system text", flock_tpl->system_text,
                                       read_golden(golden_dir, "flocking_v5_system.txt")));

  // The documented example environment: at the nest, nothing sensed, empty-handed.
  ants::AntPerception example;
  example.highest_pheromone_dir = ants::SenseDir::kNone;
  example.nest_presence = true;
  example.stronger_nest_scent_dir = ants::SenseDir::kFront;
  example.food_here = 0;
  example.carrying = false;
  report.items.push_back(compare_bytes("ants/v9 user render",
                                       ants::render_ant_user_prompt(example),
                                       read_golden(golden_dir, "ants_v9_user_example.txt")));

  // The documented example state: heading 138, one neighbor at (0.53, -3.69).
  const flocking::FlockParams params;
  const std::vector<flocking::NeighborObs> neighbors = {{0.53, -3.69, 248}};
  report.items.push_back(
      compare_bytes("flocking/v5 user render",
                    flocking::render_bird_user_prompt(138, params, neighbors),
                    read_golden(golden_dir, "flocking_v5_user_example.txt")));

  {
    ValidationItem item;
    item.name = "ants/v9 response parse";
    const auto parsed =
        ants::parse_ant_response(read_golden(golden_dir, "ants_v9_response_example.txt"));
    ants::AntAction expected;
    expected.move_forward = true;
    if (!parsed.ok) {
      item.ok = false;
      item.detail = "parse failed: " + parsed.error;
    } else if (!(parsed.value == expected)) {
      item.ok = false;
      item.detail = "parsed action differs from the documented example";
    } else {
      item.detail = "parses to the documented action (move-forward only)";
    }
    report.items.push_back(std::move(item));
  }
  {
    ValidationItem item;
    item.name = "flocking/v5 response parse";
    const auto parsed = flocking::parse_bird_response(
        read_golden(golden_dir, "flocking_v5_response_example.txt"));
    if (!parsed.ok) {
      item.ok = false;
      item.detail = "parse failed: " + parsed.error;
    } else if (parsed.value.new_heading != 146.0) {
      item.ok = false;
      item.detail = "parsed heading " + std::to_string(parsed.value.new_heading) + ", want 146";
    } else {
      item.detail = "parses to new-heading 146";
    }
    report.items.push_back(std::move(item));
  }

  for (const llm::PromptTemplate& tpl : llm::prompt_registry()) {
    if (tpl.name == "ants/v9" || tpl.name == "flocking/v5") continue;
    ValidationItem item;
    item.checked = false;
    item.name = tpl.name + " system text";
    item.detail = "content hash " + llm::template_system_hash(tpl);
    report.items.push_back(std::move(item));
  }

  for (const ValidationItem& item : report.items) {
    if (item.checked && !item.ok) report.ok = false;
  }
  return report;
}

}  // namespace swarmsim::runner
