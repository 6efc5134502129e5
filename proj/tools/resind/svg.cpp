#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace resind_cli {

namespace {

constexpr double kW = 900, kH = 600;
constexpr double kL = 70, kR = 170, kT = 50, kB = 60;  // margins

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<Series>& series, const std::string& title,
                       const std::string& x_label, const std::string& y_label) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (xmin > xmax) {
    xmin = ymin = 0;
    xmax = ymax = 1;
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  double pw = kW - kL - kR, ph = kH - kT - kB;
  auto px = [&](double x) { return kL + pw * (x - xmin) / (xmax - xmin); };
  auto py = [&](double y) { return kT + ph * (1 - (y - ymin) / (ymax - ymin)); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(kW) + " " +
       num(kH) + "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  s += "<rect width=\"" + num(kW) + "\" height=\"" + num(kH) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kW / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"17\">" +
       title + "</text>\n";

  // frame and ticks
  s += "<rect x=\"" + num(kL) + "\" y=\"" + num(kT) + "\" width=\"" + num(pw) +
       "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double fx = xmin + (xmax - xmin) * i / 5.0;
    double fy = ymin + (ymax - ymin) * i / 5.0;
    s += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kT + ph) + "\" x2=\"" +
         num(px(fx)) + "\" y2=\"" + num(kT + ph + 5) + "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kT + ph + 20) +
         "\" text-anchor=\"middle\">" + num(fx) + "</text>\n";
    s += "<line x1=\"" + num(kL - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" + num(kL) +
         "\" y2=\"" + num(py(fy)) + "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(kL - 9) + "\" y=\"" + num(py(fy) + 4) +
         "\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }
  s += "<text x=\"" + num(kL + pw / 2) + "\" y=\"" + num(kH - 14) +
       "\" text-anchor=\"middle\">" + x_label + "</text>\n";
  s += "<text x=\"18\" y=\"" + num(kT + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       num(kT + ph / 2) + ")\">" + y_label + "</text>\n";

  // series
  for (size_t si = 0; si < series.size(); ++si) {
    const auto& sr = series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string pts;
    for (size_t i = 0; i < sr.x.size(); ++i) {
      if (!std::isfinite(sr.x[i]) || !std::isfinite(sr.y[i])) continue;
      pts += num(px(sr.x[i])) + "," + num(py(sr.y[i])) + " ";
    }
    s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"1.6\"/>\n";
    double ly = kT + 18 + 20 * static_cast<double>(si);
    s += "<line x1=\"" + num(kW - kR + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
         num(kW - kR + 38) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + num(kW - kR + 44) + "\" y=\"" + num(ly) + "\">" + sr.label +
         "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace resind_cli
