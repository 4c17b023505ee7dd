#pragma once

#include <string>

namespace swarmsim::llm {

// Audit record for one attempted backend call. Remote decisions emit one
// record per HTTP attempt; retry_count is the 0-based attempt index within
// the decision. `fallback` marks every record of a decision that exhausted
// its retries and fell back to the scenario's safe action.
struct CallRecord {
  long long tick = 0;
  int agent_id = 0;
  std::string template_name;
  std::string request_digest;  // 64-bit content hash of the request body, hex
  std::string raw_response;    // response content when transport succeeded
  std::string parse_outcome;   // "ok" | "parse_error" | "transport_error" | "config_error"
  double latency_ms = 0.0;
  int retry_count = 0;
  bool fallback = false;
};

}  // namespace swarmsim::llm
