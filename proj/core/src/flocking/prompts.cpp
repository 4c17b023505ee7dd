#include "swarmsim/flocking/prompts.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "json.hpp"

#include "swarmsim/format.hpp"
#include "swarmsim/heading.hpp"
#include "../text_scan.hpp"

namespace swarmsim::flocking {

namespace {

std::string neighbor_chunk(int k, const NeighborObs& n) {
  return "neighbor_" + std::to_string(k) + ": x: " + format_fixed(n.rel_x, 2) +
         ", y: " + format_fixed(n.rel_y, 2) + ", heading: " + std::to_string(n.heading_deg) +
         " deg";
}

std::string render_final(int heading_deg, const FlockParams& p,
                         const std::vector<NeighborObs>& neighbors) {
  auto num = [](double v) { return format_trimmed(v, 2); };
  std::string s;
  s += "These are the flocking parameters: \n";
  s += "   -Maximum separate turn: " + num(p.max_separate_turn) + ", \n";
  s += "   -Maximum align turn: " + num(p.max_align_turn) + ", \n";
  s += "   -Maximum cohere turn: " + num(p.max_cohere_turn) + ", \n";
  s += "   -Minimum separation: " + num(p.minimum_separation) + "; \n";
  s += "   \n";
  s += "This is your current environment: \n";
  s += "   -Current heading: " + std::to_string(heading_deg) + " deg, \n";
  s += "   -Neighbors in vision radius: ";
  if (neighbors.empty()) {
    s += "none";
  } else {
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (i > 0) s += " ";
      s += neighbor_chunk(static_cast<int>(i + 1), neighbors[i]) + ";";
    }
  }
  return s;
}

std::string render_plain(int heading_deg, const FlockParams& p,
                         const std::vector<NeighborObs>& neighbors) {
  auto num = [](double v) { return format_trimmed(v, 2); };
  std::string s;
  s += "These are the flocking parameters:\n\n";
  s += "    Maximum separate turn: " + num(p.max_separate_turn) + "\n";
  s += "    Maximum align turn: " + num(p.max_align_turn) + "\n";
  s += "    Maximum cohere turn: " + num(p.max_cohere_turn) + "\n";
  s += "    Minimum separation: " + num(p.minimum_separation) + "\n\n";
  s += "This is your current environment:\n\n";
  s += "    Current heading: " + std::to_string(heading_deg) + " deg\n";
  s += "    Neighbors in vision radius: ";
  if (neighbors.empty()) {
    s += "none";
  } else {
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (i > 0) s += "; ";
      s += neighbor_chunk(static_cast<int>(i + 1), neighbors[i]);
    }
  }
  return s;
}

}  // namespace

std::string render_bird_user_prompt(int heading_deg, const FlockParams& params,
                                    const std::vector<NeighborObs>& neighbors) {
  return render_final(heading_deg, params, neighbors);
}

std::string render_bird_user_prompt(int heading_deg, const FlockParams& params,
                                    const std::vector<NeighborObs>& neighbors,
                                    FlockUserStyle style) {
  return style == FlockUserStyle::kFinal ? render_final(heading_deg, params, neighbors)
                                         : render_plain(heading_deg, params, neighbors);
}

namespace {

ants::Parsed<BirdDecision> fail(const std::string& raw, std::string why) {
  ants::Parsed<BirdDecision> p;
  p.error = std::move(why);
  p.raw = raw;
  return p;
}

ants::Parsed<BirdDecision> success(const std::string& raw, double heading,
                                   std::optional<std::string> rationale) {
  if (!std::isfinite(heading)) return fail(raw, "new-heading is not finite");
  ants::Parsed<BirdDecision> p;
  p.ok = true;
  p.value.new_heading = normalize_heading(heading);
  p.value.rationale = std::move(rationale);
  p.raw = raw;
  return p;
}

// Finds `key` (quoted or bare) in `text` and parses the numeric value after
// the following ':'; tolerates quotes around the number.
bool scan_numeric_key(const std::string& text, const std::string& key, double& out) {
  std::size_t at = 0;
  while ((at = text.find(key, at)) != std::string::npos) {
    std::size_t i = at + key.size();
    at += key.size();
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == '"' || text[i] == '\'')) {
      ++i;
    }
    if (i >= text.size() || text[i] != ':') continue;
    ++i;
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == '"' || text[i] == '\'')) {
      ++i;
    }
    const char* start = text.c_str() + i;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end != start) {
      out = v;
      return true;
    }
  }
  return false;
}

// Free-text rationale in a non-JSON block: everything between "rationale:"
// and the heading key (or the end), trimmed of quotes, commas and whitespace.
std::optional<std::string> scan_rationale(const std::string& text) {
  std::size_t at = text.find("rationale");
  while (at != std::string::npos) {
    std::size_t i = at + 9;
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == '"' || text[i] == '\'')) {
      ++i;
    }
    if (i < text.size() && text[i] == ':') {
      ++i;
      std::size_t end = text.size();
      for (const char* key : {"new-heading", "new_heading"}) {
        const std::size_t kp = text.find(key, i);
        if (kp != std::string::npos) end = std::min(end, kp);
      }
      std::string value = text.substr(i, end - i);
      const auto is_trim = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '\'' || c == ',';
      };
      std::size_t lo = 0;
      while (lo < value.size() && is_trim(value[lo])) ++lo;
      std::size_t hi = value.size();
      while (hi > lo && is_trim(value[hi - 1])) --hi;
      if (hi > lo) return value.substr(lo, hi - lo);
      return std::nullopt;
    }
    at = text.find("rationale", at + 1);
  }
  return std::nullopt;
}

}  // namespace

ants::Parsed<BirdDecision> parse_bird_response(const std::string& text) {
  std::string body;
  const bool has_block = detail::first_brace_block(text, body);

  if (has_block) {
    const nlohmann::json j = nlohmann::json::parse("{" + body + "}", nullptr, false);
    if (!j.is_discarded() && j.is_object()) {
      const auto it = j.find("new-heading");
      if (it != j.end() && it->is_number()) {
        std::optional<std::string> rationale;
        const auto rat = j.find("rationale");
        if (rat != j.end() && rat->is_string()) rationale = rat->get<std::string>();
        return success(text, it->get<double>(), std::move(rationale));
      }
      if (it != j.end() && it->is_string()) {
        // Heading serialized as a string; accept if numeric.
        const std::string s = it->get<std::string>();
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() && end == s.c_str() + s.size()) return success(text, v, std::nullopt);
      }
    }
  }

  // Tolerant path: the models' rationale prose is frequently not valid JSON.
  const std::string& hay = has_block ? body : text;
  double v = 0.0;
  if (scan_numeric_key(hay, "new-heading", v) || scan_numeric_key(hay, "new_heading", v)) {
    return success(text, v, scan_rationale(hay));
  }
  return fail(text, "no numeric new-heading found");
}

}  // namespace swarmsim::flocking
