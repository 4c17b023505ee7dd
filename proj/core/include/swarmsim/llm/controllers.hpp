#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swarmsim/ants/types.hpp"
#include "swarmsim/flocking/types.hpp"
#include "swarmsim/llm/call_record.hpp"
#include "swarmsim/llm/chat_client.hpp"
#include "swarmsim/llm/templates.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::llm {

// Controller kind labels as written to logs and accepted in configs.
inline constexpr std::string_view kKindRuleBased = "rule_based";
inline constexpr std::string_view kKindRuleTable = "rule_table";
inline constexpr std::string_view kKindOracle = "scripted_oracle";
inline constexpr std::string_view kKindRemote = "llm_remote";

struct AntDecisionOutcome {
  ants::AntAction action;
  std::optional<std::string> raw_response;  // last transport-complete body, if any
  bool fallback = false;                    // action is the scenario fallback
  std::vector<CallRecord> calls;            // remote decisions: one per HTTP attempt
};

// Per-agent decision maker. decide() must not touch engine RNG streams: any
// randomness a controller needs lives in its own policy stream, and actions
// that defer randomness (rotate=random) are resolved by the engine.
class AntController {
 public:
  virtual ~AntController() = default;
  virtual std::string_view kind() const = 0;
  virtual AntDecisionOutcome decide(const ants::AntObservation& obs, long long tick,
                                    int agent_id) = 0;
};

// Reference foraging rules over the raw sensor readings.
class RuleBasedAntController final : public AntController {
 public:
  RuleBasedAntController(const ants::AntsParams& params, RngStream policy_rng);
  std::string_view kind() const override { return kKindRuleBased; }
  AntDecisionOutcome decide(const ants::AntObservation& obs, long long tick,
                            int agent_id) override;

 private:
  ants::AntsParams params_;
  RngStream rng_;
};

// The deployed prompt's decision table applied directly to the perception,
// with no text round trip. Draws no randomness of its own.
class DirectTableAntController final : public AntController {
 public:
  std::string_view kind() const override { return kKindRuleTable; }
  AntDecisionOutcome decide(const ants::AntObservation& obs, long long tick,
                            int agent_id) override;
};

// Renders the template's user prompt from the observation, then re-parses the
// text and applies the prompt's decision table — the full encode/decode path
// with a deterministic stand-in for the model. Requires a directional-style
// ants template (throws std::invalid_argument otherwise).
class OracleAntController final : public AntController {
 public:
  explicit OracleAntController(const PromptTemplate& tmpl);
  std::string_view kind() const override { return kKindOracle; }
  AntDecisionOutcome decide(const ants::AntObservation& obs, long long tick,
                            int agent_id) override;

 private:
  const PromptTemplate* tmpl_;
};

// Chat-completions backend. Transport failures retry inside the client;
// parse failures re-ask the model up to max_retries more times; exhaustion
// returns the scenario fallback (all-false action with rotate=random) and
// flags the final call record.
class RemoteAntController final : public AntController {
 public:
  RemoteAntController(std::shared_ptr<const ChatClient> client, const PromptTemplate& tmpl);
  std::string_view kind() const override { return kKindRemote; }
  AntDecisionOutcome decide(const ants::AntObservation& obs, long long tick,
                            int agent_id) override;

 private:
  std::shared_ptr<const ChatClient> client_;
  const PromptTemplate* tmpl_;
};

// What a bird controller sees for one decision: its own full-precision
// heading, full-precision neighbor views (rule policy), and the quantized
// neighbor list (prompt rendering). Both lists are sorted by distance.
struct BirdObservation {
  double heading = 0.0;
  std::vector<flocking::NeighborView> views;
  std::vector<flocking::NeighborObs> obs;
};

struct BirdDecisionOutcome {
  flocking::BirdDecision decision;
  std::optional<std::string> raw_response;
  bool fallback = false;
  std::vector<CallRecord> calls;
};

class BirdController {
 public:
  virtual ~BirdController() = default;
  virtual std::string_view kind() const = 0;
  virtual BirdDecisionOutcome decide(const BirdObservation& obs, long long tick,
                                     int agent_id) = 0;
};

class RuleBasedBirdController final : public BirdController {
 public:
  explicit RuleBasedBirdController(const flocking::FlockParams& params);
  std::string_view kind() const override { return kKindRuleBased; }
  BirdDecisionOutcome decide(const BirdObservation& obs, long long tick, int agent_id) override;

 private:
  flocking::FlockParams params_;
};

// Encode/decode stand-in: renders the user prompt (quantized heading and
// neighbors), re-parses it, and applies the flocking rules to exactly what
// the text carries.
class OracleBirdController final : public BirdController {
 public:
  OracleBirdController(const PromptTemplate& tmpl, const flocking::FlockParams& params);
  std::string_view kind() const override { return kKindOracle; }
  BirdDecisionOutcome decide(const BirdObservation& obs, long long tick, int agent_id) override;

 private:
  const PromptTemplate* tmpl_;
  flocking::FlockParams params_;
};

// Chat-completions backend; fallback keeps the current heading.
class RemoteBirdController final : public BirdController {
 public:
  RemoteBirdController(std::shared_ptr<const ChatClient> client, const PromptTemplate& tmpl,
                       const flocking::FlockParams& params);
  std::string_view kind() const override { return kKindRemote; }
  BirdDecisionOutcome decide(const BirdObservation& obs, long long tick, int agent_id) override;

 private:
  std::shared_ptr<const ChatClient> client_;
  const PromptTemplate* tmpl_;
  flocking::FlockParams params_;
};

}  // namespace swarmsim::llm
