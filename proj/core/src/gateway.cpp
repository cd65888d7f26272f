#include "polder/gateway.hpp"

#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <thread>

#include "polder/text.hpp"

namespace polder {

namespace {

using nlohmann::json;

struct ParsedUrl {
  std::string origin;       // scheme://host[:port]
  std::string path_prefix;  // optional mount point, no trailing slash
};

ParsedUrl parse_base_url(const std::string& base_url) {
  const std::size_t scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::invalid_argument("base_url must include a scheme: " + base_url);
  }
  std::size_t path_begin = base_url.find('/', scheme_end + 3);
  ParsedUrl out;
  if (path_begin == std::string::npos) {
    out.origin = base_url;
  } else {
    out.origin = base_url.substr(0, path_begin);
    out.path_prefix = base_url.substr(path_begin);
    while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
      out.path_prefix.pop_back();
    }
  }
  return out;
}

json request_body(const ChatRequest& request, const std::string& model_name) {
  json messages = json::array();
  for (const Turn& t : request.messages) {
    messages.push_back({{"role", std::string(role_name(t.role))},
                        {"content", t.content}});
  }
  return json{{"model", model_name},
              {"messages", std::move(messages)},
              {"temperature", request.temperature},
              {"max_tokens", request.max_tokens}};
}

class WireBackend final : public ChatBackend {
 public:
  explicit WireBackend(const BackendConfig& config)
      : config_(config), url_(parse_base_url(config.base_url)) {
    config_.validate();
    if (!config_.api_key_env.empty()) {
      const char* key = std::getenv(config_.api_key_env.c_str());
      if (key == nullptr || *key == '\0') {
        throw GatewayError(GatewayError::Kind::Auth, 0,
                           "API key environment variable " +
                               config_.api_key_env + " is not set");
      }
      api_key_ = key;
    }
  }

  CompletionResult complete(const ChatRequest& request) override {
    const std::string body = request_body(request, config_.model_name).dump();
    int attempt = 0;
    while (true) {
      httplib::Client client(url_.origin);
      client.set_connection_timeout(std::chrono::duration<double>(
          config_.timeout_seconds));
      client.set_read_timeout(
          std::chrono::duration<double>(config_.timeout_seconds));
      httplib::Headers headers;
      if (!api_key_.empty()) {
        headers.emplace("Authorization", "Bearer " + api_key_);
      }
      auto res = client.Post(url_.path_prefix + "/chat/completions", headers,
                             body, "application/json");

      if (!res) {
        if (attempt >= config_.max_retries) {
          const bool timed_out = res.error() == httplib::Error::ConnectionTimeout ||
                                 res.error() == httplib::Error::Read;
          throw GatewayError(timed_out ? GatewayError::Kind::Timeout
                                       : GatewayError::Kind::Transport,
                             0,
                             "transport failure after " +
                                 std::to_string(attempt) + " retries: " +
                                 httplib::to_string(res.error()));
        }
        backoff(attempt++, body);
        continue;
      }

      const int status = res->status;
      if (status == 200) return parse_success(res->body);
      if (status == 401 || status == 403) {
        throw GatewayError(GatewayError::Kind::Auth, status,
                           "authentication rejected (HTTP " +
                               std::to_string(status) + ")");
      }
      if (auto filtered = parse_filtered_request(res->body, status)) {
        return *filtered;
      }
      const bool retryable = status == 429 || status >= 500;
      if (!retryable || attempt >= config_.max_retries) {
        throw GatewayError(GatewayError::Kind::Transport, status,
                           "HTTP " + std::to_string(status) + ": " +
                               res->body.substr(0, 200));
      }
      backoff(attempt++, body);
    }
  }

 private:
  void backoff(int attempt, const std::string& body) const {
    double delay = config_.retry_base_seconds * std::pow(2.0, attempt);
    delay = std::min(delay, config_.retry_cap_seconds);
    // Deterministic jitter in [0.5, 1.5), derived from the request.
    std::uint64_t h =
        text::mix64(text::fnv1a64(body) + static_cast<std::uint64_t>(attempt));
    delay *= 0.5 + static_cast<double>(h >> 11) * 0x1.0p-53;
    std::this_thread::sleep_for(std::chrono::duration<double>(delay));
  }

  static CompletionResult parse_success(const std::string& body) {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& e) {
      throw GatewayError(GatewayError::Kind::MalformedResponse, 200,
                         std::string("unparseable body: ") + e.what());
    }
    try {
      const json& choice = j.at("choices").at(0);
      CompletionResult out;
      const std::string reason = choice.value("finish_reason", "stop");
      if (reason == "content_filter") {
        out.finish_reason = FinishReason::ContentFilter;
      } else if (reason == "length") {
        out.finish_reason = FinishReason::Length;
      } else {
        out.finish_reason = FinishReason::Stop;
      }
      if (choice.contains("message") &&
          choice.at("message").contains("content") &&
          !choice.at("message").at("content").is_null()) {
        out.text = choice.at("message").at("content").get<std::string>();
      }
      if (out.text.empty() && out.finish_reason != FinishReason::ContentFilter) {
        throw GatewayError(GatewayError::Kind::MalformedResponse, 200,
                           "empty completion content");
      }
      if (j.contains("usage")) {
        TokenUsage usage;
        usage.prompt_tokens = j["usage"].value("prompt_tokens", 0);
        usage.completion_tokens = j["usage"].value("completion_tokens", 0);
        out.usage = usage;
      }
      return out;
    } catch (const json::exception& e) {
      throw GatewayError(GatewayError::Kind::MalformedResponse, 200,
                         std::string("unexpected response shape: ") + e.what());
    }
  }

  // Azure-style blocked *requests* arrive as HTTP 400 with an error code;
  // they are a data condition, not a transport fault.
  static std::optional<CompletionResult> parse_filtered_request(
      const std::string& body, int status) {
    if (status != 400) return std::nullopt;
    try {
      json j = json::parse(body);
      if (j.contains("error") &&
          j["error"].value("code", "") == "content_filter") {
        CompletionResult out;
        out.finish_reason = FinishReason::ContentFilter;
        return out;
      }
    } catch (const json::exception&) {
    }
    return std::nullopt;
  }

  BackendConfig config_;
  ParsedUrl url_;
  std::string api_key_;
};

}  // namespace

void BackendConfig::validate() const {
  if (max_in_flight < 1) {
    throw std::invalid_argument("max_in_flight must be >= 1");
  }
  if (max_retries < 0) {
    throw std::invalid_argument("max_retries must be >= 0");
  }
  if (timeout_seconds <= 0) {
    throw std::invalid_argument("timeout must be positive");
  }
}

std::string_view finish_reason_name(FinishReason r) {
  switch (r) {
    case FinishReason::Stop: return "stop";
    case FinishReason::Length: return "length";
    case FinishReason::ContentFilter: return "content_filter";
  }
  return "stop";
}

std::unique_ptr<ChatBackend> make_wire_backend(const BackendConfig& config) {
  return std::make_unique<WireBackend>(config);
}

std::vector<BatchItem> run_batch(ChatBackend& backend,
                                 const std::vector<ChatRequest>& requests,
                                 int max_in_flight) {
  std::vector<BatchItem> results(requests.size());
  if (requests.empty()) return results;
  const int workers =
      std::max(1, std::min<int>(max_in_flight,
                                static_cast<int>(requests.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= requests.size()) return;
      try {
        results[i].result = backend.complete(requests[i]);
        results[i].ok = true;
      } catch (const std::exception& e) {
        results[i].ok = false;
        results[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace polder
