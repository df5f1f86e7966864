#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egap {

enum class OutcomeKind { Intensity, Refusal, Malformed };
std::string_view outcome_kind_name(OutcomeKind k);
OutcomeKind parse_outcome_kind(std::string_view s);

struct ParseOutcome {
  OutcomeKind kind = OutcomeKind::Malformed;
  std::optional<double> value;  // present iff kind == Intensity
  std::string matched_rule;     // "refusal:<pattern>", "noise", "number", "out_of_range", "none"

  bool operator==(const ParseOutcome&) const = default;
};

// Case-insensitive substring patterns checked before numeric extraction.
struct RefusalRules {
  std::vector<std::string> patterns = default_patterns();
  bool degenerate_noise = true;  // whole reply made of punctuation, e.g. "!!!!![]!!"

  static std::vector<std::string> default_patterns();
  RefusalRules with_extra(const std::vector<std::string>& extra) const;
};

ParseOutcome parse_intensity(std::string_view text, double scale_max, const RefusalRules& rules = {});

// One parsed response, grouped for refusal accounting.
struct ParsedRecord {
  std::string model;
  std::string category;  // category id
  std::string setting;   // "P0S0T0"
  std::string perceiver;
  std::string experiencer;
  OutcomeKind kind = OutcomeKind::Malformed;
};

struct RefusalRow {
  std::string model;
  std::string category;
  std::string setting;
  std::uint64_t refusals = 0;
  std::uint64_t intensities = 0;
  std::uint64_t malformed = 0;

  std::uint64_t total() const { return refusals + intensities + malformed; }
  double percent() const { return total() == 0 ? 0.0 : 100.0 * static_cast<double>(refusals) / static_cast<double>(total()); }
  // Two decimals, e.g. "43.49%".
  std::string percent_text() const;
};

struct PairRefusal {
  std::string model, category, setting, perceiver, experiencer;
  std::uint64_t refusals = 0;
  std::uint64_t total = 0;
};

struct RefusalTable {
  std::vector<RefusalRow> rows;        // sorted by (model, category order, setting order)
  std::vector<PairRefusal> pairs;      // pairs with at least one refusal, most refusals first
  std::vector<std::string> notes;      // omitted/empty groups

  std::string to_csv() const;
  // Model x category rows, one column per setting (appendix layout).
  std::string to_markdown(const std::vector<std::string>& setting_order) const;
};

// expected_groups: (model, category, setting) triples that should appear; a
// triple without records is omitted with a note.
RefusalTable refusal_table(const std::vector<ParsedRecord>& records,
                           const std::vector<std::array<std::string, 3>>& expected_groups = {});

}  // namespace egap
