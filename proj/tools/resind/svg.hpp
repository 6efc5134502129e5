#pragma once

// Minimal hand-written SVG line plots: fixed viewBox, framed axes with
// ticks, one polyline per series, legend in the top-right corner.

#include <string>
#include <vector>

namespace resind_cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string render_svg(const std::vector<Series>& series, const std::string& title,
                       const std::string& x_label, const std::string& y_label);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace resind_cli
