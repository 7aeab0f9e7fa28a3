#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hyperdelta::cli::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  // Optional fixed y-range; autoscaled when lo >= hi.
  double y_lo = 0, y_hi = 0;
};

std::string render(const Plot& plot);

/// Writes render(plot) to path; throws std::runtime_error on I/O failure.
void write(const Plot& plot, const std::string& path);

}  // namespace hyperdelta::cli::svg
