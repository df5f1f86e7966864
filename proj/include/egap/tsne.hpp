#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egap/identity.hpp"
#include "egap/metrics.hpp"

namespace egap {

class TsneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TsneParams {
  double perplexity = 5.0;
  int iterations = 1000;
  double learning_rate = 200.0;
  std::uint64_t seed = 0;
  double early_exaggeration = 12.0;
  int exaggeration_iterations = 250;
};

using Point2 = std::array<double, 2>;

// Exact t-SNE. Requires >= 4 rows and perplexity < (rows - 1) / 3.
std::vector<Point2> tsne(const std::vector<std::vector<double>>& rows, const TsneParams& params);

// Per-point Gaussian conditionals calibrated to the perplexity, symmetrized (row-major n*n).
std::vector<double> tsne_affinities(const std::vector<std::vector<double>>& rows, double perplexity);

struct Embedding2D {
  std::vector<std::string> labels;
  std::vector<std::string> groups;
  std::vector<std::optional<CulturalZone>> zones;
  std::vector<Point2> points;
  TsneParams params;
};

// One point per named perceiver; each point is that perceiver's full row of the matrix.
Embedding2D tsne_project(const SquareMatrix& m, const std::vector<Identity>& axis, const GroupRegistry& registry,
                         const TsneParams& params);

bool tsne_feasible(std::size_t rows, double perplexity);

// Scatter plot; colored by cultural zone (nationality) or group otherwise.
std::string render_scatter(const Embedding2D& e, const std::string& title, const std::string& digest = "");

}  // namespace egap
