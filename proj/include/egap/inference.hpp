#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egap {

enum class ErrorClass { None, Transport, Auth, RateLimit, Server, Client, Protocol };
std::string_view error_class_name(ErrorClass e);

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::milliseconds max_backoff{30000};
  double jitter = 0.25;  // +-fraction of the computed delay
};

struct EndpointConfig {
  std::string base_url = "http://127.0.0.1:8900";
  std::string model = "synthetic";
  std::string api_key_env;  // name of the environment variable holding the key; empty = no auth header
  double temperature = 0.0;
  int max_tokens = 10;
  std::chrono::milliseconds timeout{60000};
  int concurrency = 8;
  double requests_per_second = 0.0;  // 0 = unlimited
  RetryPolicy retry;
};

struct ChatRequest {
  std::string system;  // omitted from the message list when empty
  std::string user;
  std::optional<int> max_tokens;  // overrides EndpointConfig::max_tokens
};

struct ChatResult {
  bool ok = false;
  std::string text;
  int attempts = 0;
  ErrorClass error = ErrorClass::None;
  int http_status = 0;
  std::string message;
};

// A chat-completion backend. Implementations must be safe to call from
// several threads when handed out by a ClientFactory per worker.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatResult complete(const ChatRequest& request) = 0;
  virtual std::string model_id() const = 0;
};

using ClientFactory = std::function<std::unique_ptr<ChatClient>()>;

// Token bucket shared by all workers of a run.
class RateLimiter {
 public:
  explicit RateLimiter(double requests_per_second);
  void acquire();

 private:
  double rate_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point next_;
};

// OpenAI-compatible client: POST {base_url}/v1/chat/completions.
class HttpChatClient final : public ChatClient {
 public:
  explicit HttpChatClient(EndpointConfig config, std::shared_ptr<RateLimiter> limiter = nullptr);
  ~HttpChatClient() override;
  ChatResult complete(const ChatRequest& request) override;
  std::string model_id() const override { return config_.model; }

  // Request body for the wire protocol; exposed for tests and the mock server.
  static std::string build_body(const EndpointConfig& config, const ChatRequest& request);

 private:
  struct Impl;
  EndpointConfig config_;
  std::shared_ptr<RateLimiter> limiter_;
  std::string api_key_;
  std::unique_ptr<Impl> impl_;
};

// Backoff before attempt `attempt` (1-based count of failures so far).
std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int attempt, std::uint64_t jitter_key);

// Cache key: hash(model, temperature, max tokens, system text, user text).
std::string cache_key(const EndpointConfig& config, std::string_view system, std::string_view user);

}  // namespace egap
