#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egap/corpus.hpp"
#include "egap/identity.hpp"
#include "egap/inference.hpp"
#include "egap/prompts.hpp"

namespace egap {

class SynthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Patterns match a display name, a group label, or "*".
struct RefusalRule {
  std::string perceiver = "*";
  std::string experiencer = "*";
  std::string setting = "*";  // "P2S0T0" or "*"
  double probability = 0.0;
};

struct PairPenalty {
  std::string perceiver;
  std::string experiencer;
  double offset = 0.0;
};

// Intensities are given on the 0-100 scale and rescaled for S1 prompts.
struct SyntheticModelSpec {
  std::uint64_t seed = 0;
  double default_base = 70.0;
  std::map<Emotion, double> base;
  double in_group_boost = 0.0;
  double unspecified_offset = 0.0;  // added when either side is the unspecified identity
  double noise_std = 0.0;
  std::string refusal_text = "I can't answer that.";
  std::vector<RefusalRule> refusals;
  std::vector<PairPenalty> penalties;
  std::string registry_path;  // empty: built-in registry

  double base_for(Emotion e) const;

  // Unknown keys are rejected. Relative registry paths resolve against base_dir.
  static SyntheticModelSpec from_toml(std::string_view text, const std::string& base_dir = "");
  static SyntheticModelSpec load(const std::string& path);
  std::string to_toml() const;
};

// Everything the mock may condition on, recovered from one prompt pair.
struct SynthCellKey {
  Identity perceiver;
  Identity experiencer;
  PromptSetting setting;
  Emotion emotion = Emotion::Anger;
  std::string narrative;
};

struct SynthAnswer {
  std::string text;
  bool refused = false;
  std::optional<int> value;
};

// Pure function of (spec, key).
SynthAnswer synth_respond(const SynthCellKey& key, const SyntheticModelSpec& spec);

// Recovers the cell key from exact template matches. Throws SynthError on drift
// or on identities the registry does not know.
SynthCellKey match_prompt(std::string_view system, std::string_view user, const GroupRegistry& registry);

// Third-person rewrite requests use their own template.
bool is_rewrite_prompt(std::string_view user);
std::string synth_rewrite(std::string_view user);

// Answers one chat request the way the server would (without HTTP).
std::string synth_complete(std::string_view system, std::string_view user, const SyntheticModelSpec& spec,
                           const GroupRegistry& registry);

// In-process client; exercises the same prompt bytes as the server.
class SyntheticClient : public ChatClient {
 public:
  SyntheticClient(std::shared_ptr<const SyntheticModelSpec> spec, std::shared_ptr<const GroupRegistry> registry,
                  std::string model = "synthetic");
  ChatResult complete(const ChatRequest& request) override;
  std::string model_id() const override { return model_; }

 private:
  std::shared_ptr<const SyntheticModelSpec> spec_;
  std::shared_ptr<const GroupRegistry> registry_;
  std::string model_;
};

struct SynthServerOptions {
  std::string host = "127.0.0.1";
  int port = 8900;  // 0 picks a free port
  int threads = 64;
  std::chrono::milliseconds latency{0};  // per-request delay, for load tests
};

// OpenAI-style chat-completions endpoint backed by synth_complete.
class SynthServer {
 public:
  SynthServer(SyntheticModelSpec spec, GroupRegistry registry);
  ~SynthServer();

  // Binds and starts serving on a background thread; returns the bound port.
  int start(const SynthServerOptions& options = {});
  void wait();
  void stop();
  int port() const { return port_; }

  std::uint64_t requests_served() const { return served_.load(); }
  std::uint64_t requests_rejected() const { return rejected_.load(); }
  int peak_in_flight() const { return peak_.load(); }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
  std::atomic<std::uint64_t> served_{0};
  std::atomic<std::uint64_t> rejected_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
};

}  // namespace egap
