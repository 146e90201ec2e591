#include "tendonsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tendonsim/csv.hpp"

namespace tendonsim {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 75.0;
constexpr double kRight = 640.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 505.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) { return format_double(v); }

}  // namespace

std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::vector<double>& x,
                             const std::vector<PlotSeries>& series) {
  if (x.size() < 2) {
    throw std::domain_error("plot needs at least 2 rows");
  }
  if (series.empty()) {
    throw std::domain_error("plot needs at least one series");
  }
  for (const auto& s : series) {
    if (s.y.size() != x.size()) {
      throw std::domain_error("series '" + s.label + "' does not match the abscissa length");
    }
  }

  const auto [x_min_it, x_max_it] = std::minmax_element(x.begin(), x.end());
  double x_min = *x_min_it, x_max = *x_max_it;
  if (x_max == x_min) x_max = x_min + 1.0;
  double y_min = series[0].y[0], y_max = y_min;
  for (const auto& s : series) {
    for (const double v : s.y) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (y_max == y_min) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const auto sx = [&](double v) { return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft); };
  const auto sy = [&](double v) { return kBottom - (v - y_min) / (y_max - y_min) * (kBottom - kTop); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

  // axes
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double tx = x_min + (x_max - x_min) * i / kTicks;
    const double px = sx(tx);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(px) +
           "\" y2=\"" + num(kBottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(kBottom + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(tx) +
           "</text>\n";
    const double ty = y_min + (y_max - y_min) * i / kTicks;
    const double py = sy(ty);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(ty) +
           "</text>\n";
  }
  svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
         "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) points += ' ';
      points += num(sx(x[i])) + "," + num(sy(series[s].y[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" "
           "points=\"" + points + "\"/>\n";
    const double ly = kTop + 18.0 * static_cast<double>(s);
    svg += "<line x1=\"" + num(kRight + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(kRight + 34) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kRight + 40) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + series[s].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tendonsim
