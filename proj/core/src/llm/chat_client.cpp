#include "swarmsim/llm/chat_client.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "swarmsim/format.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim::llm {

std::string default_base_url() {
  const char* env = std::getenv("SWARM_LLM_BASE_URL");
  if (env && *env) return env;
  return "https://api.openai.com/v1";
}

namespace {

// Splits "scheme://host[:port]/prefix" into the origin httplib wants and the
// path prefix to prepend to endpoints.
void split_base_url(const std::string& base_url, std::string& origin, std::string& prefix) {
  const std::size_t scheme = base_url.find("://");
  const std::size_t path_start =
      scheme == std::string::npos ? base_url.find('/') : base_url.find('/', scheme + 3);
  if (path_start == std::string::npos) {
    origin = base_url;
    prefix.clear();
  } else {
    origin = base_url.substr(0, path_start);
    prefix = base_url.substr(path_start);
  }
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ChatClient::ChatClient(LlmEndpointConfig cfg) : cfg_(std::move(cfg)) {}

ChatClient::Result ChatClient::complete(const std::string& system_text,
                                        const std::string& user_text) const {
  Result result;

  const char* key = cfg_.api_key_env.empty() ? nullptr : std::getenv(cfg_.api_key_env.c_str());
  if (!key || !*key) {
    result.error_kind = ErrorKind::kConfig;
    result.error = "API key environment variable '" + cfg_.api_key_env + "' is not set";
    return result;
  }

  nlohmann::ordered_json body;
  body["model"] = cfg_.model;
  body["temperature"] = cfg_.temperature;
  body["messages"] = nlohmann::ordered_json::array(
      {{{"role", "system"}, {"content", system_text}}, {{"role", "user"}, {"content", user_text}}});
  const std::string payload = body.dump();
  result.request_digest = hex64(fnv1a64(payload));

  std::string origin, prefix;
  split_base_url(cfg_.base_url, origin, prefix);
  const std::string path = prefix + "/chat/completions";

  const int total_attempts = cfg_.max_retries + 1;
  for (int attempt = 0; attempt < total_attempts; ++attempt) {
    if (attempt > 0) {
      const double delay = cfg_.backoff_initial_ms * static_cast<double>(1 << (attempt - 1));
      std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(delay));
    }

    httplib::Client client(origin);
    client.set_connection_timeout(std::chrono::duration<double>(cfg_.timeout_seconds));
    client.set_read_timeout(std::chrono::duration<double>(cfg_.timeout_seconds));
    client.set_write_timeout(std::chrono::duration<double>(cfg_.timeout_seconds));
    client.set_bearer_token_auth(key);

    const auto t0 = std::chrono::steady_clock::now();
    httplib::Result res = client.Post(path, payload, "application/json");
    Attempt a;
    a.latency_ms = ms_since(t0);

    if (!res) {
      a.error = "transport: " + httplib::to_string(res.error());
      result.attempts.push_back(a);
      continue;
    }
    a.http_status = res->status;
    if (res->status < 200 || res->status >= 300) {
      a.error = "http status " + std::to_string(res->status);
      result.attempts.push_back(a);
      continue;
    }

    const nlohmann::json envelope = nlohmann::json::parse(res->body, nullptr, false);
    if (envelope.is_discarded() || !envelope.contains("choices") ||
        !envelope["choices"].is_array() || envelope["choices"].empty() ||
        !envelope["choices"][0].contains("message") ||
        !envelope["choices"][0]["message"].contains("content") ||
        !envelope["choices"][0]["message"]["content"].is_string()) {
      a.error = "malformed completion envelope";
      result.attempts.push_back(a);
      continue;
    }

    result.attempts.push_back(a);
    result.ok = true;
    result.content = envelope["choices"][0]["message"]["content"].get<std::string>();
    return result;
  }

  result.error_kind = ErrorKind::kTransport;
  result.error = result.attempts.empty() ? "no attempts made" : result.attempts.back().error;
  return result;
}

}  // namespace swarmsim::llm
