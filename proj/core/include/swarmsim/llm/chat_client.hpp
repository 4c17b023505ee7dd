#pragma once

#include <string>
#include <vector>

#include "swarmsim/llm/endpoint.hpp"

namespace swarmsim::llm {

// Minimal OpenAI-compatible chat-completions client. One POST to
// {base_url}/chat/completions per attempt; transport-level failures (connect
// errors, timeouts, non-2xx statuses, malformed envelopes) are retried with
// exponential backoff up to cfg.max_retries extra attempts.
class ChatClient {
 public:
  enum class ErrorKind { kNone, kConfig, kTransport };

  struct Attempt {
    int http_status = 0;        // 0 when the request never completed
    std::string error;          // empty on success
    double latency_ms = 0.0;
  };

  struct Result {
    bool ok = false;
    ErrorKind error_kind = ErrorKind::kNone;
    std::string content;        // choices[0].message.content on success
    std::string error;
    std::string request_digest; // content hash of the posted body
    std::vector<Attempt> attempts;
  };

  explicit ChatClient(LlmEndpointConfig cfg);

  // Stateless request: the body is a pure function of (model, temperature,
  // system_text, user_text). Missing API key fails with kConfig before any
  // network activity.
  Result complete(const std::string& system_text, const std::string& user_text) const;

  const LlmEndpointConfig& config() const { return cfg_; }

 private:
  LlmEndpointConfig cfg_;
};

}  // namespace swarmsim::llm
