#include "swarmsim/ants/prompts.hpp"

#include <algorithm>
#include <cctype>

#include "swarmsim/format.hpp"
#include "../text_scan.hpp"

namespace swarmsim::ants {

namespace {

std::string py_bool(bool v) { return v ? "True" : "False"; }

std::string nest_note(bool at_nest) {
  return at_nest ? "(You are currently at the nest)" : "(You are not currently at the nest)";
}

std::string carry_note(bool carrying) {
  return carrying ? "(You are currently carrying food)" : "(You are not currently carrying food)";
}

std::string render_directional(const AntPerception& p, bool final_style) {
  const std::string ind = final_style ? "   " : "    ";
  const std::string pher_label = final_style ? "Highest" : "Higher";
  std::string s;
  s += final_style ? "This is your current environment: \n" : "Current environment:\n";
  s += ind + "-" + pher_label + " Pheromone Concentration: " + to_string(p.highest_pheromone_dir) + ",\n";
  s += ind + "-Nest Presence: " + py_bool(p.nest_presence) + " " + nest_note(p.nest_presence) + ",\n";
  s += ind + "-Stronger Nest Scent: " + to_string(p.stronger_nest_scent_dir) + ",\n";
  s += ind + "-Food Concentration at your location: " + std::to_string(p.food_here) + ",\n";
  s += ind + "-Carrying Food Status: " + py_bool(p.carrying) + " " + carry_note(p.carrying);
  if (final_style) s += ".";
  return s;
}

std::string render_numeric(const AntObservation& obs, bool with_status) {
  const AntPerception& p = obs.perception;
  const SensorReadings& r = obs.readings;
  auto num = [](double v) { return format_trimmed(v, 2); };
  std::string s;
  s += "Current environment:\n";
  s += "    -Pheromone concentration (Left: " + num(r.pheromone[0]) +
       ", Front: " + num(r.pheromone[1]) + ", Right: " + num(r.pheromone[2]) + "),\n";
  s += "    -Nest presence: " + py_bool(p.nest_presence);
  if (with_status) s += " " + nest_note(p.nest_presence);
  s += ",\n";
  s += "    -Nest scent (Left: " + num(r.nest_scent[0]) + ", Front: " + num(r.nest_scent[1]) +
       ", Right: " + num(r.nest_scent[2]) + "),\n";
  s += "    -Food concentration at your location: " + std::to_string(p.food_here) + ",\n";
  s += "    -Carrying food status: " + py_bool(p.carrying);
  if (with_status) s += " " + carry_note(p.carrying);
  return s;
}

}  // namespace

std::string render_ant_user_prompt(const AntPerception& p) {
  return render_directional(p, /*final_style=*/true);
}

std::string render_ant_user_prompt(const AntObservation& obs, AntUserStyle style) {
  switch (style) {
    case AntUserStyle::kNumeric: return render_numeric(obs, false);
    case AntUserStyle::kNumericStatus: return render_numeric(obs, true);
    case AntUserStyle::kDirectional: return render_directional(obs.perception, false);
    case AntUserStyle::kDirectionalFinal: return render_directional(obs.perception, true);
  }
  return render_directional(obs.perception, true);
}

namespace {

// --- tolerant dictionary scanning -----------------------------------------
// LLM responses are close to, but often not, valid JSON (Python booleans,
// single quotes, code fences). The scanner below extracts the first
// brace-delimited block with quote awareness and walks key/value pairs.

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void skip_ws_and_commas() {
    while (!done() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
  }

  bool read_quoted(std::string& out) {
    const char q = s[i];
    if (q != '"' && q != '\'') return false;
    ++i;
    out.clear();
    while (!done() && s[i] != q) {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;  // keep escaped char verbatim
      out += s[i++];
    }
    if (done()) return false;
    ++i;  // closing quote
    return true;
  }

  bool read_word(std::string& out) {
    out.clear();
    while (!done() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      out += s[i++];
    }
    return !out.empty();
  }
};

std::string lower(std::string v) {
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return v;
}

Parsed<AntAction> fail(const std::string& raw, std::string why) {
  Parsed<AntAction> p;
  p.error = std::move(why);
  p.raw = raw;
  return p;
}

}  // namespace

Parsed<AntAction> parse_ant_response(const std::string& text) {
  std::string body;
  if (!detail::first_brace_block(text, body)) {
    return fail(text, "no brace-delimited action dictionary found");
  }

  AntAction action;
  bool seen[5] = {false, false, false, false, false};
  Scanner sc{body};
  for (;;) {
    sc.skip_ws_and_commas();
    if (sc.done()) break;

    std::string key;
    if (!sc.read_quoted(key) && !sc.read_word(key)) {
      return fail(text, "expected a key");
    }
    key = lower(key);
    std::replace(key.begin(), key.end(), '_', '-');

    sc.skip_ws_and_commas();
    if (sc.done() || sc.peek() != ':') return fail(text, "expected ':' after key '" + key + "'");
    ++sc.i;
    sc.skip_ws_and_commas();
    if (sc.done()) return fail(text, "missing value for key '" + key + "'");

    std::string value;
    if (!sc.read_quoted(value) && !sc.read_word(value)) {
      return fail(text, "unreadable value for key '" + key + "'");
    }
    const std::string v = lower(value);

    auto as_bool = [&](bool& slot, int idx) -> bool {
      if (v == "true") { slot = true; seen[idx] = true; return true; }
      if (v == "false") { slot = false; seen[idx] = true; return true; }
      return false;
    };

    if (key == "move-forward") {
      if (!as_bool(action.move_forward, 0)) return fail(text, "move-forward must be a boolean");
    } else if (key == "rotate") {
      if (v == "left") action.rotate = Rotate::kLeft;
      else if (v == "right") action.rotate = Rotate::kRight;
      else if (v == "none") action.rotate = Rotate::kNone;
      else if (v == "random") action.rotate = Rotate::kRandom;
      else return fail(text, "rotate must be left/right/none/random, got '" + value + "'");
      seen[1] = true;
    } else if (key == "pick-up-food") {
      if (!as_bool(action.pick_up_food, 2)) return fail(text, "pick-up-food must be a boolean");
    } else if (key == "drop-pheromone") {
      if (!as_bool(action.drop_pheromone, 3)) return fail(text, "drop-pheromone must be a boolean");
    } else if (key == "drop-food") {
      if (!as_bool(action.drop_food, 4)) return fail(text, "drop-food must be a boolean");
    } else {
      return fail(text, "unknown key '" + key + "'");
    }
  }

  static const char* kNames[5] = {"move-forward", "rotate", "pick-up-food", "drop-pheromone",
                                  "drop-food"};
  for (int i = 0; i < 5; ++i) {
    if (!seen[i]) return fail(text, std::string("missing key '") + kNames[i] + "'");
  }

  Parsed<AntAction> ok;
  ok.ok = true;
  ok.value = action;
  ok.raw = text;
  return ok;
}

}  // namespace swarmsim::ants
