#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polder/prompts.hpp"

namespace polder {

struct BackendConfig {
  std::string base_url;
  std::string model_name;
  std::string api_key_env = "OPENAI_API_KEY";
  int max_in_flight = 4;
  int max_retries = 5;
  double timeout_seconds = 60.0;
  // Exponential backoff parameters; 429 and 5xx retry, other 4xx do not.
  double retry_base_seconds = 1.0;
  double retry_cap_seconds = 30.0;

  void validate() const;  // throws std::invalid_argument
};

enum class FinishReason { Stop, Length, ContentFilter };

std::string_view finish_reason_name(FinishReason r);

struct TokenUsage {
  int prompt_tokens = 0;
  int completion_tokens = 0;
};

struct CompletionResult {
  std::string text;
  FinishReason finish_reason = FinishReason::Stop;
  std::optional<TokenUsage> usage;
};

class GatewayError : public std::runtime_error {
 public:
  enum class Kind { Transport, Auth, MalformedResponse, Timeout };

  GatewayError(Kind kind, int http_status, const std::string& what)
      : std::runtime_error(what), kind_(kind), http_status_(http_status) {}
  Kind kind() const { return kind_; }
  int http_status() const { return http_status_; }

 private:
  Kind kind_;
  int http_status_;
};

// Uniform access to one chat-completion backend. Implementations must be
// safe to call from multiple threads.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual CompletionResult complete(const ChatRequest& request) = 0;
};

// OpenAI-compatible client over HTTP: POST {base_url}/chat/completions,
// bearer token from the environment variable named in the config.
// Content-filter refusals surface as FinishReason::ContentFilter, never as
// transport errors. Throws GatewayError once retries are exhausted.
std::unique_ptr<ChatBackend> make_wire_backend(const BackendConfig& config);

// Offline backend whose responses are a pure function of
// (seed, request purpose, request text hash). generate requests yield a
// well-formed self-chat transcript with 5..12 exchanges; judge requests
// yield "<rating>k</rating>" with k in 1..5. A request containing the
// literal marker "[[content_filter]]" is answered with a content-filter
// refusal, for exercising the skip path.
std::unique_ptr<ChatBackend> make_mock_backend(std::uint64_t seed);

struct BatchItem {
  bool ok = false;
  CompletionResult result;
  std::string error;
};

// Order-preserving parallel map over the backend with at most
// max_in_flight requests outstanding. Per-item failures are captured, not
// thrown.
std::vector<BatchItem> run_batch(ChatBackend& backend,
                                 const std::vector<ChatRequest>& requests,
                                 int max_in_flight);

}  // namespace polder
