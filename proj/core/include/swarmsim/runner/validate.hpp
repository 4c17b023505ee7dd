#pragma once

#include <string>
#include <vector>

namespace swarmsim::runner {

struct ValidationItem {
  std::string name;     // e.g. "ants/v9 system text"
  bool checked = true;  // false = informational (hash only, no golden file)
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationItem> items;

  std::string to_text() const;
};

// Byte-compares the deployed templates — system texts, documented example
// user renders, and example response parses — against the golden files in
// golden_dir, and reports every other registry template by content hash.
// A missing golden file raises ConfigError.
ValidationReport validate_prompts(const std::string& golden_dir);

}  // namespace swarmsim::runner
