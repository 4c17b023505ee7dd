#include "swarmsim/llm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "swarmsim/ants/policy.hpp"
#include "swarmsim/flocking/policy.hpp"
#include "swarmsim/heading.hpp"

namespace swarmsim::llm {

namespace {

// Reads the token following `label`, up to the next ',', newline, or '('.
std::string token_after(const std::string& text, const std::string& label) {
  const std::size_t at = text.find(label);
  if (at == std::string::npos) {
    throw OracleError("oracle: missing label '" + label + "' in prompt text");
  }
  std::size_t i = at + label.size();
  while (i < text.size() && text[i] == ' ') ++i;
  std::size_t end = i;
  while (end < text.size() && text[end] != ',' && text[end] != '\n' && text[end] != '(') ++end;
  std::string tok = text.substr(i, end - i);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '.')) tok.pop_back();
  return tok;
}

ants::SenseDir dir_from_token(const std::string& tok, bool allow_none, const std::string& label) {
  if (tok == "Left") return ants::SenseDir::kLeft;
  if (tok == "Front") return ants::SenseDir::kFront;
  if (tok == "Right") return ants::SenseDir::kRight;
  if (allow_none && tok == "None") return ants::SenseDir::kNone;
  throw OracleError("oracle: bad direction '" + tok + "' for " + label);
}

bool bool_from_token(const std::string& tok, const std::string& label) {
  if (tok == "True") return true;
  if (tok == "False") return false;
  throw OracleError("oracle: bad boolean '" + tok + "' for " + label);
}

double number_after(const std::string& text, const std::string& label, std::size_t from,
                    std::size_t* end_pos = nullptr) {
  const std::size_t at = text.find(label, from);
  if (at == std::string::npos) {
    throw OracleError("oracle: missing label '" + label + "' in prompt text");
  }
  const char* start = text.c_str() + at + label.size();
  char* end = nullptr;
  const double v = std::strtod(start, &end);
  if (end == start) throw OracleError("oracle: no number after '" + label + "'");
  if (end_pos) *end_pos = static_cast<std::size_t>(end - text.c_str());
  return v;
}

}  // namespace

ants::AntAction oracle_ant_decision(const std::string& user_prompt_text) {
  ants::AntPerception p;
  p.highest_pheromone_dir = dir_from_token(
      token_after(user_prompt_text, "Pheromone Concentration:"), true, "pheromone");
  p.nest_presence = bool_from_token(token_after(user_prompt_text, "Nest Presence:"), "nest");
  p.stronger_nest_scent_dir =
      dir_from_token(token_after(user_prompt_text, "Stronger Nest Scent:"), false, "nest scent");
  const std::string food = token_after(user_prompt_text, "Food Concentration at your location:");
  char* end = nullptr;
  p.food_here = static_cast<int>(std::strtol(food.c_str(), &end, 10));
  if (end == food.c_str()) throw OracleError("oracle: bad food count '" + food + "'");
  p.carrying = bool_from_token(token_after(user_prompt_text, "Carrying Food Status:"), "carrying");

  return ants::ant_decision_table(p);
}

flocking::BirdDecision oracle_bird_decision(const std::string& user_prompt_text) {
  const std::string& text = user_prompt_text;
  flocking::FlockParams params;
  params.max_separate_turn = number_after(text, "Maximum separate turn:", 0);
  params.max_align_turn = number_after(text, "Maximum align turn:", 0);
  params.max_cohere_turn = number_after(text, "Maximum cohere turn:", 0);
  params.minimum_separation = number_after(text, "Minimum separation:", 0);

  std::size_t pos = 0;
  const double heading = number_after(text, "Current heading:", 0, &pos);

  const std::size_t nb = text.find("Neighbors in vision radius:", pos);
  if (nb == std::string::npos) throw OracleError("oracle: missing neighbors section");

  std::vector<flocking::NeighborView> views;
  std::size_t cursor = nb;
  for (int k = 0;; ++k) {
    const std::size_t mark = text.find("x:", cursor);
    if (mark == std::string::npos) break;
    flocking::NeighborView v;
    std::size_t after = 0;
    v.rel.x = number_after(text, "x:", mark, &after);
    v.rel.y = number_after(text, "y:", after, &after);
    v.heading = number_after(text, "heading:", after, &after);
    v.distance = std::hypot(v.rel.x, v.rel.y);
    v.id = k;
    views.push_back(v);
    cursor = after;
  }
  std::sort(views.begin(), views.end(),
            [](const flocking::NeighborView& a, const flocking::NeighborView& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.id < b.id;
            });

  return {flocking::flock_rule_heading(normalize_heading(heading), views, params), std::nullopt};
}

}  // namespace swarmsim::llm
