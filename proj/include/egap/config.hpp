#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egap/corpus.hpp"
#include "egap/identity.hpp"
#include "egap/inference.hpp"
#include "egap/metrics.hpp"
#include "egap/parsing.hpp"
#include "egap/prompts.hpp"
#include "egap/tsne.hpp"

namespace egap {

// Messages name the offending key path, e.g. "endpoint.concurrency".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StatsConfig {
  std::uint64_t permutations = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  MaskMode mask_mode = MaskMode::Either;
};

enum class ColorScale { PerFigure, Global };

struct AnalysisConfig {
  TsneParams tsne;
  ColorScale color_scale = ColorScale::PerFigure;
};

struct RunConfig {
  std::string run_id = "default";
  std::string output_dir = "runs";
  std::vector<Category> categories{kAllCategories.begin(), kAllCategories.end()};
  std::vector<PromptSetting> settings{paper_settings().begin(), paper_settings().end()};

  std::string corpus_path;
  ColumnMapping columns;
  std::size_t corpus_limit = 0;   // 0 = all events
  std::size_t corpus_events = 0;  // declared corpus size, lets the grid be counted before ingest

  std::string registry_path;  // empty = built-in

  EndpointConfig endpoint;
  std::optional<EndpointConfig> rewrite_endpoint;  // falls back to endpoint

  std::vector<std::string> extra_refusal_patterns;
  StatsConfig stats;
  AnalysisConfig analysis;

  // Relative paths are resolved against base_dir.
  static RunConfig from_toml(std::string_view text, const std::string& base_dir = "");
  static RunConfig load(const std::string& path);
  // Canonical, fully resolved form; the digest is taken over this text.
  std::string to_toml() const;
  std::string digest() const;
  // Ignores [stats] and [analysis], which cannot change what run/parse produce.
  std::string data_digest() const;

  std::string run_dir() const;
  GroupRegistry registry() const;
  RefusalRules refusal_rules() const;
  const EndpointConfig& rewriter() const { return rewrite_endpoint ? *rewrite_endpoint : endpoint; }
};

// Applies "section.key=value" overrides (value parsed as a TOML value).
void apply_override(RunConfig& config, std::string_view assignment);

}  // namespace egap
