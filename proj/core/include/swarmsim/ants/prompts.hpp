#pragma once

#include <string>

#include "swarmsim/ants/types.hpp"

namespace swarmsim::ants {

// User-prompt layouts across the template generations. The numeric styles
// carry raw sensor values; the directional styles carry categorical cues only.
enum class AntUserStyle {
  kNumeric,            // v1-v2: raw readings, no status clarifications
  kNumericStatus,      // v3-v4: raw readings + "(You are currently ...)" notes
  kDirectional,        // v5-v8: directional cues, 4-space indent, "Higher ..."
  kDirectionalFinal,   // v9 (deployed): 3-space indent, "Highest ...", closing period
};

// Renders the user prompt for the deployed template (byte-exact to the golden
// file for the documented example perception).
std::string render_ant_user_prompt(const AntPerception& p);

// Style-aware rendering; numeric styles need the raw readings.
std::string render_ant_user_prompt(const AntObservation& obs, AntUserStyle style);

template <typename T>
struct Parsed {
  bool ok = false;
  T value{};
  std::string error;   // set when !ok
  std::string raw;     // original text, carried for logs/retries
};

// Extracts the first brace-delimited dictionary and maps it onto AntAction.
// Accepts Python (True/False) and JSON (true/false) booleans and single- or
// double-quoted keys/values; requires exactly the five known keys; never
// throws — malformed input comes back as Parsed{ok=false}.
Parsed<AntAction> parse_ant_response(const std::string& text);

}  // namespace swarmsim::ants
