#include "swarmsim/llm/controllers.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "swarmsim/ants/policy.hpp"
#include "swarmsim/ants/prompts.hpp"
#include "swarmsim/flocking/policy.hpp"
#include "swarmsim/flocking/prompts.hpp"
#include "swarmsim/heading.hpp"
#include "swarmsim/llm/oracle.hpp"

namespace swarmsim::llm {

namespace {

ants::AntAction fallback_ant_action() {
  ants::AntAction a;
  a.rotate = ants::Rotate::kRandom;
  return a;
}

int quantized_heading(double heading) {
  return static_cast<int>(normalize_heading(std::round(heading)));
}

struct RemoteRounds {
  bool ok = false;
  bool fallback = false;
  std::optional<std::string> raw_response;
  std::vector<CallRecord> calls;
};

// Shared request/retry choreography for both scenarios. `try_parse` consumes
// one response body and reports whether it yielded a usable decision; a parse
// failure re-asks the model (fresh request) until the retry budget runs out.
// Transport or configuration exhaustion ends the decision immediately.
template <typename TryParse>
RemoteRounds remote_rounds(const ChatClient& client, const PromptTemplate& tmpl,
                           const std::string& user_text, long long tick, int agent_id,
                           TryParse&& try_parse) {
  RemoteRounds out;
  const int parse_rounds = client.config().max_retries + 1;
  int attempt_index = 0;
  for (int round = 0; round < parse_rounds; ++round) {
    const ChatClient::Result r = client.complete(tmpl.system_text, user_text);
    if (r.attempts.empty()) {
      // No request could be made at all (missing key): one synthetic record.
      CallRecord rec;
      rec.tick = tick;
      rec.agent_id = agent_id;
      rec.template_name = tmpl.name;
      rec.request_digest = r.request_digest;
      rec.parse_outcome = "config_error";
      rec.retry_count = attempt_index;
      rec.fallback = true;
      out.calls.push_back(std::move(rec));
      out.fallback = true;
      return out;
    }
    for (std::size_t i = 0; i < r.attempts.size(); ++i) {
      const bool last = (i + 1 == r.attempts.size());
      CallRecord rec;
      rec.tick = tick;
      rec.agent_id = agent_id;
      rec.template_name = tmpl.name;
      rec.request_digest = r.request_digest;
      rec.latency_ms = r.attempts[i].latency_ms;
      rec.retry_count = attempt_index++;
      if (last && r.ok) {
        rec.raw_response = r.content;
        const bool parsed = try_parse(r.content);
        rec.parse_outcome = parsed ? "ok" : "parse_error";
        out.raw_response = r.content;
        out.calls.push_back(std::move(rec));
        if (parsed) {
          out.ok = true;
          return out;
        }
        if (round + 1 == parse_rounds) {
          out.fallback = true;
          for (CallRecord& c : out.calls) c.fallback = true;
          return out;
        }
        break;  // next round: fresh request
      }
      rec.parse_outcome = "transport_error";
      out.calls.push_back(std::move(rec));
      if (last) {  // !r.ok here: transport budget exhausted, decision over
        out.fallback = true;
        for (CallRecord& c : out.calls) c.fallback = true;
        return out;
      }
    }
  }
  out.fallback = true;
  for (CallRecord& c : out.calls) c.fallback = true;
  return out;
}

}  // namespace

RuleBasedAntController::RuleBasedAntController(const ants::AntsParams& params,
                                               RngStream policy_rng)
    : params_(params), rng_(std::move(policy_rng)) {}

AntDecisionOutcome RuleBasedAntController::decide(const ants::AntObservation& obs, long long,
                                                  int) {
  AntDecisionOutcome out;
  out.action = ants::rule_based_ant_policy(obs, params_, rng_);
  return out;
}

AntDecisionOutcome DirectTableAntController::decide(const ants::AntObservation& obs, long long,
                                                    int) {
  AntDecisionOutcome out;
  out.action = ants::ant_decision_table(obs.perception);
  return out;
}

OracleAntController::OracleAntController(const PromptTemplate& tmpl) : tmpl_(&tmpl) {
  if (tmpl.scenario != Scenario::kAnts || !tmpl.oracle_compatible()) {
    throw std::invalid_argument("oracle ant controller needs a directional ants template, got '" +
                                tmpl.name + "'");
  }
}

AntDecisionOutcome OracleAntController::decide(const ants::AntObservation& obs, long long, int) {
  AntDecisionOutcome out;
  const std::string user = ants::render_ant_user_prompt(obs, tmpl_->ant_style);
  out.action = oracle_ant_decision(user);
  return out;
}

RemoteAntController::RemoteAntController(std::shared_ptr<const ChatClient> client,
                                         const PromptTemplate& tmpl)
    : client_(std::move(client)), tmpl_(&tmpl) {
  if (tmpl.scenario != Scenario::kAnts) {
    throw std::invalid_argument("remote ant controller needs an ants template, got '" +
                                tmpl.name + "'");
  }
}

AntDecisionOutcome RemoteAntController::decide(const ants::AntObservation& obs, long long tick,
                                               int agent_id) {
  const std::string user = ants::render_ant_user_prompt(obs, tmpl_->ant_style);
  ants::AntAction action;
  bool have_action = false;
  RemoteRounds rounds =
      remote_rounds(*client_, *tmpl_, user, tick, agent_id, [&](const std::string& content) {
        const auto parsed = ants::parse_ant_response(content);
        if (parsed.ok) {
          action = parsed.value;
          have_action = true;
        }
        return parsed.ok;
      });
  AntDecisionOutcome out;
  out.raw_response = std::move(rounds.raw_response);
  out.calls = std::move(rounds.calls);
  out.fallback = !have_action;
  out.action = have_action ? action : fallback_ant_action();
  return out;
}

RuleBasedBirdController::RuleBasedBirdController(const flocking::FlockParams& params)
    : params_(params) {}

BirdDecisionOutcome RuleBasedBirdController::decide(const BirdObservation& obs, long long, int) {
  BirdDecisionOutcome out;
  out.decision.new_heading = flocking::flock_rule_heading(obs.heading, obs.views, params_);
  return out;
}

OracleBirdController::OracleBirdController(const PromptTemplate& tmpl,
                                           const flocking::FlockParams& params)
    : tmpl_(&tmpl), params_(params) {
  if (tmpl.scenario != Scenario::kFlocking) {
    throw std::invalid_argument("oracle bird controller needs a flocking template, got '" +
                                tmpl.name + "'");
  }
}

BirdDecisionOutcome OracleBirdController::decide(const BirdObservation& obs, long long, int) {
  BirdDecisionOutcome out;
  const std::string user = flocking::render_bird_user_prompt(quantized_heading(obs.heading),
                                                             params_, obs.obs, tmpl_->flock_style);
  out.decision = oracle_bird_decision(user);
  return out;
}

RemoteBirdController::RemoteBirdController(std::shared_ptr<const ChatClient> client,
                                           const PromptTemplate& tmpl,
                                           const flocking::FlockParams& params)
    : client_(std::move(client)), tmpl_(&tmpl), params_(params) {
  if (tmpl.scenario != Scenario::kFlocking) {
    throw std::invalid_argument("remote bird controller needs a flocking template, got '" +
                                tmpl.name + "'");
  }
}

BirdDecisionOutcome RemoteBirdController::decide(const BirdObservation& obs, long long tick,
                                                 int agent_id) {
  const std::string user = flocking::render_bird_user_prompt(quantized_heading(obs.heading),
                                                             params_, obs.obs, tmpl_->flock_style);
  flocking::BirdDecision decision;
  bool have_decision = false;
  RemoteRounds rounds =
      remote_rounds(*client_, *tmpl_, user, tick, agent_id, [&](const std::string& content) {
        const auto parsed = flocking::parse_bird_response(content);
        if (parsed.ok) {
          decision = parsed.value;
          have_decision = true;
        }
        return parsed.ok;
      });
  BirdDecisionOutcome out;
  out.raw_response = std::move(rounds.raw_response);
  out.calls = std::move(rounds.calls);
  out.fallback = !have_decision;
  out.decision = have_decision
                     ? decision
                     : flocking::BirdDecision{normalize_heading(obs.heading), std::nullopt};
  return out;
}

}  // namespace swarmsim::llm
