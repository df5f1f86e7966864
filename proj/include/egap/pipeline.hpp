#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egap/config.hpp"
#include "egap/corpus.hpp"
#include "egap/inference.hpp"
#include "egap/report.hpp"
#include "egap/runner.hpp"

namespace egap {

// Bad input: config, corpus, registry or missing prerequisite stage. Maps to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StageStatus { Ok = 0, Validation = 1, Partial = 2 };

struct StageOutcome {
  StageStatus status = StageStatus::Ok;
  std::string summary;  // one human-readable line
};

struct RunStageOptions {
  bool resume = false;            // fast-forward to the checkpoint in progress.json
  std::uint64_t max_requests = 0; // stop after this many upstream requests (0 = no limit)
  bool repair_store = false;
};

// Stage driver over runs/<run-id>/. Every stage reads and writes only there,
// except `run`/`rewrite`, which also talk to the endpoint.
class Pipeline {
 public:
  using Logger = std::function<void(const std::string&)>;
  using FactoryMaker = std::function<ClientFactory(const EndpointConfig&)>;

  explicit Pipeline(RunConfig config);

  const RunConfig& config() const { return config_; }
  std::string path(const std::string& name) const;

  void set_logger(Logger log) { log_ = std::move(log); }
  // Replaces the HTTP client (tests plug in in-process clients here).
  void set_client_factory(FactoryMaker maker) { make_factory_ = std::move(maker); }

  StageOutcome ingest();
  StageOutcome rewrite();
  StageOutcome run(const RunStageOptions& options = {});
  StageOutcome parse();
  StageOutcome stats();
  StageOutcome plot();
  StageOutcome report(bool force = false);

  // Cells in the configured grid. Events: override, else the ingested corpus, else the corpus file.
  std::uint64_t count_prompts(std::optional<std::size_t> events = std::nullopt) const;
  PromptPair render_prompt(Category category, const PromptSetting& setting, const std::string& perceiver,
                           const std::string& experiencer, std::size_t event_index) const;

  Corpus load_ingested() const;
  RunReport last_run() const { return last_run_; }

 private:
  void log(const std::string& line) const;
  ClientFactory factory_for(const EndpointConfig& e) const;
  std::vector<GridSpec> grids(const GroupRegistry& registry, std::size_t events) const;
  void write_config_snapshot() const;

  RunConfig config_;
  Logger log_;
  FactoryMaker make_factory_;
  RunReport last_run_;
};

}  // namespace egap
