#pragma once

#include <cstdio>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "egap/parsing.hpp"
#include "egap/util.hpp"

namespace egap {

struct InferenceRecord {
  std::string category;  // category id
  std::string setting;   // "P0S0T0"
  std::string perceiver;
  std::string experiencer;
  std::string event_id;
  std::string prompt_digest;
  std::string cache_key;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 0;
  std::string text;  // raw completion, verbatim
  int attempts = 0;
  bool reused = false;  // served from an identical prompt already answered
  std::string timestamp;
  std::optional<ParseOutcome> parse;

  // "category|setting|perceiver|experiencer|event_id"
  std::string cell_key() const;
  // cell key + model + temperature; one record per identity key.
  std::string identity_key() const;
};

std::string record_to_json(const InferenceRecord& r);
InferenceRecord record_from_json(std::string_view text);

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StoreRecovery {
  std::size_t records = 0;
  std::size_t dropped_partial = 0;  // torn trailing write removed
  std::size_t dropped_corrupt = 0;  // only with repair=true
};

// Append-only JSON-lines log, one checksummed record per line:
//   {"sha":"<16 hex>","rec":{...}}
// The index is rebuilt on open. Appends are serialized through one writer.
class ResponseStore {
 public:
  // Creates the file when missing. A torn final line is dropped and the file
  // truncated; a bad checksum elsewhere throws StoreError unless repair is set.
  static std::unique_ptr<ResponseStore> open(const std::string& path, bool repair = false);
  ~ResponseStore();

  ResponseStore(const ResponseStore&) = delete;
  ResponseStore& operator=(const ResponseStore&) = delete;

  bool contains(const InferenceRecord& key_fields) const;
  bool contains_identity(const std::string& identity_key) const;
  std::optional<std::string> cached_text(const std::string& cache_key) const;
  // Thread-safe; returns false (and writes nothing) if the identity already exists.
  bool append(const InferenceRecord& record);
  void flush();

  std::size_t size() const;
  const StoreRecovery& recovery() const { return recovery_; }
  const std::string& path() const { return path_; }

  // Streams every record in file order.
  static void scan(const std::string& path, const std::function<void(const InferenceRecord&)>& fn);
  static std::vector<InferenceRecord> read_all(const std::string& path);

 private:
  ResponseStore() = default;

  std::string path_;
  std::FILE* file_ = nullptr;
  mutable std::mutex mutex_;
  std::unordered_set<Key128, Key128Hash> identities_;
  std::unordered_map<Key128, std::string, Key128Hash> texts_by_cache_key_;
  StoreRecovery recovery_;
};

std::string utc_timestamp();

}  // namespace egap
