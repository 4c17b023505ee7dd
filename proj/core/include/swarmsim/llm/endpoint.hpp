#pragma once

#include <string>

namespace swarmsim::llm {

// Remote chat-completions endpoint settings. Every request is stateless: the
// full context travels in the (system, user) pair and no conversation history
// is kept between calls.
struct LlmEndpointConfig {
  std::string base_url = "https://api.openai.com/v1";
  std::string model = "gpt-4o";
  double temperature = 0.0;
  int max_retries = 2;             // additional attempts after the first failure
  double timeout_seconds = 30.0;
  std::string api_key_env = "OPENAI_API_KEY";
  double backoff_initial_ms = 250.0;  // doubles per retry
};

// Resolves the default base URL: SWARM_LLM_BASE_URL when set, else the
// OpenAI endpoint above.
std::string default_base_url();

}  // namespace swarmsim::llm
