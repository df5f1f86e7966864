#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egap/identity.hpp"
#include "egap/metrics.hpp"
#include "egap/parsing.hpp"

namespace egap {

// Everything the stats stage computes for one (category, setting, model) matrix.
struct MatrixStats {
  std::string config_digest;
  std::string category;  // category id
  std::string setting;   // "P0S0T0"
  std::string model;
  std::vector<Identity> axis;
  MeanMatrix means;
  std::vector<std::size_t> refused;    // per cell
  std::vector<std::size_t> malformed;  // per cell
  ZMatrix z;
  GapResult gap;
  TTestBattery ttests;
  double z_min = 0.0, z_max = 0.0;

  std::string to_json() const;
  static MatrixStats from_json(const std::string& text);
};

// "1.73 [-0.226, 0.224]"
std::string format_delta_cell(const GapResult& g);
// "48.77 ± 15.37"
std::string format_musigma_cell(double mu, double sigma);

std::string matrix_csv(const SquareMatrix& m, const std::vector<Identity>& axis, const std::string& digest);

struct ReportInputs {
  std::string digest;
  std::vector<std::string> setting_order;  // "P0S0T0", ...
  std::vector<MatrixStats> stats;
  std::optional<RefusalTable> refusals;
  std::vector<std::string> heatmaps;             // file names present in the bundle
  std::map<std::string, std::string> tsne;       // category id -> file name
  std::map<std::string, std::string> tsne_notes; // category id -> reason omitted
  std::vector<std::string> notices;              // extra notices for the header
};

// File name -> contents for report.md, delta.csv, refusals.csv, musigma.csv.
std::map<std::string, std::string> build_report(const ReportInputs& in);

}  // namespace egap
