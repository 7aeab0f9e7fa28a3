#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hyperdelta::cli::svg {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

// 1-2-5 tick step covering [lo, hi] in about five ticks.
double tick_step(double lo, double hi) {
  const double raw = (hi - lo) / 5;
  const double base = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * base >= raw) return m * base;
  return 10 * base;
}

}  // namespace

std::string render(const Plot& plot) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : plot.series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
    }
  if (plot.y_lo < plot.y_hi) y_lo = plot.y_lo, y_hi = plot.y_hi;
  if (!(x_lo < x_hi)) x_lo = 0, x_hi = 1;
  if (!(y_lo < y_hi)) y_lo -= 1, y_hi += 1;
  const double pad = (y_hi - y_lo) * 0.05;
  y_lo -= pad, y_hi += pad;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto sy = [&](double y) { return kTop + (y_hi - std::clamp(y, y_lo, y_hi)) / (y_hi - y_lo) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(plot.title)
     << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = tick_step(x_lo, x_hi), ys = tick_step(y_lo, y_hi);
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-12 * xs; t += xs)
    os << "<line x1=\"" << sx(t) << "\" y1=\"" << kTop + ph << "\" x2=\"" << sx(t) << "\" y2=\"" << kTop + ph + 5
       << "\" stroke=\"black\"/><text x=\"" << sx(t) << "\" y=\"" << kTop + ph + 18
       << "\" text-anchor=\"middle\">" << num(std::abs(t) < 1e-12 * xs ? 0.0 : t) << "</text>\n";
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-12 * ys; t += ys)
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << sy(t) << "\" x2=\"" << kLeft << "\" y2=\"" << sy(t)
       << "\" stroke=\"black\"/><text x=\"" << kLeft - 8 << "\" y=\"" << sy(t) + 4
       << "\" text-anchor=\"end\">" << num(std::abs(t) < 1e-12 * ys ? 0.0 : t) << "</text>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">"
     << escape(plot.x_label) << "</text>\n";
  os << "<text transform=\"translate(16," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
     << escape(plot.y_label) << "</text>\n";

  std::size_t index = 0;
  for (const auto& s : plot.series) {
    const char* colour = kPalette[index % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.6\""
       << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
    for (const auto& [x, y] : s.points)
      if (std::isfinite(x) && std::isfinite(y)) os << sx(x) << ',' << sy(y) << ' ';
    os << "\"/>\n";
    const double ly = kTop + 12 + 18.0 * static_cast<double>(index);
    os << "<line x1=\"" << kLeft + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 36 << "\" y2=\"" << ly
       << "\" stroke=\"" << colour << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
       << "/><text x=\"" << kLeft + pw + 40 << "\" y=\"" << ly + 4 << "\">" << escape(s.label) << "</text>\n";
    ++index;
  }
  os << "</svg>\n";
  return os.str();
}

void write(const Plot& plot, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open plot file " + path);
  out << render(plot);
  if (!out) throw std::runtime_error("failed writing plot file " + path);
}

}  // namespace hyperdelta::cli::svg
