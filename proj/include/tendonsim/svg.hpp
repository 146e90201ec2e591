#ifndef TENDONSIM_SVG_HPP
#define TENDONSIM_SVG_HPP

#include <string>
#include <vector>

namespace tendonsim {

struct PlotSeries {
  std::string label;
  std::vector<double> y;
};

// Standalone SVG line plot: axes with tick labels, one polyline per series,
// legend of series labels. Visual aid only. Needs at least 2 rows and one
// series; throws std::domain_error otherwise.
std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::vector<double>& x,
                             const std::vector<PlotSeries>& series);

}  // namespace tendonsim

#endif  // TENDONSIM_SVG_HPP
