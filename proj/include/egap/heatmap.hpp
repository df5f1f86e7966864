#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egap/identity.hpp"
#include "egap/metrics.hpp"

namespace egap {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HeatmapSpec {
  SquareMatrix values;
  std::vector<bool> mask;           // row-major; empty = nothing masked
  std::vector<std::string> labels;  // registry order, unspecified first
  std::vector<std::size_t> group_starts;  // indices that open a new group (separator drawn before them)
  std::optional<double> bound;      // symmetric color bound; default max |value|
  std::string title;
  std::string digest;               // embedded as a comment when set
};

// Labels, group separators and mask from the axis and (optional) t-test battery.
HeatmapSpec make_heatmap_spec(const SquareMatrix& values, const std::vector<Identity>& axis,
                              const TTestBattery* battery = nullptr);

struct Rgb {
  int r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// Diverging blue-grey-red map over t in [-1, 1].
Rgb diverging_color(double t);
std::string hex_color(Rgb c);

double color_bound(const HeatmapSpec& spec);
// Position of cell (i, j) on the color axis in [-1, 1]; nullopt when masked.
std::optional<double> color_value(const HeatmapSpec& spec, std::size_t i, std::size_t j);

// Deterministic SVG document.
std::string render_heatmap(const HeatmapSpec& spec);

// Shared by the heatmap and scatter renderers.
std::string xml_escape(std::string_view s);

}  // namespace egap
