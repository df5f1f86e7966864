#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "egap/identity.hpp"

namespace egap {

class MetricsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Square row-major matrix; rows are perceivers, columns experiencers.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size, double fill = 0.0) : n(size), values(size * size, fill) {}
  SquareMatrix(std::size_t size, std::vector<double> v);

  double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

// Event-level intensities per (perceiver, experiencer) cell. Refused or
// malformed responses are simply absent from their cell.
struct IntensityTensor {
  Category category = Category::RaceOrEthnicity;
  std::vector<Identity> axis;
  std::string setting;
  std::string model;
  std::vector<std::map<std::string, double>> cells;  // row-major, n*n

  IntensityTensor() = default;
  IntensityTensor(Category c, std::vector<Identity> ax, std::string setting_label = {}, std::string model_id = {});

  std::size_t n() const { return axis.size(); }
  std::map<std::string, double>& cell(std::size_t i, std::size_t j) { return cells[i * axis.size() + j]; }
  const std::map<std::string, double>& cell(std::size_t i, std::size_t j) const { return cells[i * axis.size() + j]; }
  void add(std::size_t perceiver, std::size_t experiencer, const std::string& event_id, double value);
};

struct MeanMatrix {
  SquareMatrix mean;
  std::vector<std::size_t> counts;  // surviving events per cell
  double mu = 0.0;                  // grand mean over all cells
  double sigma = 0.0;               // population std over all cells
};

struct ZMatrix {
  SquareMatrix z;
  double mu = 0.0;
  double sigma = 0.0;
  bool degenerate = false;  // sigma == 0; z is all zeros
};

// Population mean/std over every entry.
void grand_moments(std::span<const double> values, double& mean, double& stddev);

MeanMatrix aggregate_means(const IntensityTensor& tensor);
ZMatrix znormalize(const SquareMatrix& m0);

// mean(M over Same cells) - mean(M over Different cells); Undefined cells are skipped.
double gap_score(const SquareMatrix& m, std::span<const Relation> relation);

struct GapResult {
  double delta = 0.0;
  double ci_low = 0.0;   // 2.5th percentile of the null
  double ci_high = 0.0;  // 97.5th percentile of the null
  double null_mean = 0.0;
  double p_one_sided = 1.0;  // (#{d >= d_obs} + 1) / (n + 1)
  double p_two_sided = 1.0;  // (#{|d| >= |d_obs|} + 1) / (n + 1)
  std::uint64_t permutations = 0;
  std::uint64_t seed = 0;
  std::vector<double> null_distribution;  // kept only when requested
};

struct PermutationOptions {
  std::uint64_t permutations = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency; results identical for any value
  bool keep_null = false;
};

// Structured permutation test: rows and columns of the named-identity block
// are permuted independently; positions keep their original same() labels.
// Indices whose relation row is entirely Undefined (the unspecified identity)
// stay fixed.
GapResult permutation_test(const SquareMatrix& m, std::span<const Relation> relation, const PermutationOptions& opts);

// Permutation used for iteration `iteration`; deterministic in (seed, iteration).
std::vector<std::size_t> permutation_for(std::uint64_t seed, std::uint64_t iteration, std::uint64_t stream,
                                         std::size_t size);

// Linear-interpolated percentile of a sorted sample, q in [0, 1].
double percentile_sorted(std::span<const double> sorted, double q);

struct PairedTTest {
  std::size_t n = 0;  // common events
  double mean_diff = 0.0;
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
  bool degenerate = false;  // zero variance of the differences
};

// Two-sided paired t-test on x - y. Requires x.size() == y.size() >= 2.
PairedTTest paired_ttest(std::span<const double> x, std::span<const double> y);
// Two-sided tail probability of Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

enum class MaskMode { Either, Both };

enum class CellStatus {
  NotTested,     // involves the unspecified identity
  Reference,     // diagonal cell; it is the in-group reference itself
  Tested,
  Insufficient,  // a comparison had fewer than 3 common events
};
std::string_view cell_status_name(CellStatus s);

struct Comparison {
  bool ran = false;
  PairedTTest test;
  double p_adjusted = 1.0;
  bool significant = false;
};

struct CellTest {
  CellStatus status = CellStatus::NotTested;
  Comparison vs_perceiver;    // against I(g_p, g_p)
  Comparison vs_experiencer;  // against I(g_exp, g_exp)
  bool masked = false;
};

struct TTestBattery {
  std::size_t n = 0;
  std::vector<CellTest> cells;  // row-major
  std::size_t tests = 0;        // Bonferroni m
  double alpha = 0.05;
  double threshold = 0.05;      // alpha / m
  MaskMode mask_mode = MaskMode::Either;

  const CellTest& cell(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
  std::vector<bool> mask() const;
};

TTestBattery paired_ttests(const IntensityTensor& tensor, double alpha = 0.05, MaskMode mode = MaskMode::Either);

}  // namespace egap
