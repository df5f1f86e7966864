#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "egap/corpus.hpp"
#include "egap/inference.hpp"
#include "egap/parsing.hpp"
#include "egap/prompts.hpp"
#include "egap/store.hpp"

namespace egap {

struct RunFailure {
  std::uint64_t offset = 0;
  std::string cell_key;
  ErrorClass error = ErrorClass::None;
  std::string message;
  int attempts = 0;
};

struct RunProgress {
  std::uint64_t processed = 0;  // cells visited this invocation
  std::uint64_t total = 0;
  std::uint64_t watermark = 0;  // every cell below this offset has a record
};

struct RunReport {
  std::uint64_t total_cells = 0;
  std::uint64_t completed = 0;  // records written this invocation
  std::uint64_t requests = 0;   // upstream calls that succeeded or failed
  std::uint64_t cached = 0;     // cells already in the store
  std::uint64_t reused = 0;     // records served from an identical prompt's answer
  std::uint64_t failed = 0;
  double wall_seconds = 0.0;
  bool interrupted = false;
  std::uint64_t watermark = 0;
  std::vector<RunFailure> failures;
};

struct RunOptions {
  std::uint64_t start_offset = 0;
  std::uint64_t max_requests = 0;  // stop dispatching after this many upstream requests; 0 = no limit
  std::uint64_t checkpoint_every = 1000;
  std::string progress_path;       // progress JSON rewritten at each checkpoint when set
  std::string progress_tag;        // stored in the progress file (the config digest)
  std::optional<RefusalRules> parse_rules;  // fills InferenceRecord::parse when set
  std::function<void(const RunProgress&)> on_progress;
  const std::atomic<bool>* cancel = nullptr;
};

// Executes the concatenated grids (global offsets run across grids in order).
// Cells already in the store are skipped; identical prompts share one request.
RunReport run_grid(const std::vector<GridSpec>& grids, const Corpus& corpus, const EndpointConfig& endpoint,
                   const ClientFactory& make_client, ResponseStore& store, const RunOptions& options = {});

// Record skeleton (no response yet) for one grid cell.
InferenceRecord make_record(const GridSpec& grid, const GridCell& cell, const Corpus& corpus,
                            const EndpointConfig& endpoint, const PromptPair& prompt);

}  // namespace egap
