// Copyright 2026 planarsim Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "psc/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace psc {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 160;  // room for the legend
constexpr double kMarginTop = 40;
constexpr double kMarginBottom = 55;

const char *kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string decade_label(int exponent) {
  return "1e" + std::to_string(exponent);
}

}  // namespace

std::string render_loglog_svg(const std::vector<PlotSeries> &series,
                              const std::string &title,
                              const std::string &x_label,
                              const std::string &y_label,
                              const std::string &comment) {
  double min_v = 1;
  double max_v = 1;
  bool has_data = false;
  for (const auto &s : series) {
    for (auto [x, y] : s.points) {
      if (x <= 0 || y <= 0) {
        continue;
      }
      if (!has_data) {
        min_v = std::min(x, y);
        max_v = std::max(x, y);
        has_data = true;
      } else {
        min_v = std::min({min_v, x, y});
        max_v = std::max({max_v, x, y});
      }
    }
  }
  if (!has_data) {
    min_v = 1e-4;
    max_v = 1;
  }
  int exp_lo = static_cast<int>(std::floor(std::log10(min_v)));
  int exp_hi = static_cast<int>(std::ceil(std::log10(max_v)));
  if (exp_hi <= exp_lo) {
    exp_hi = exp_lo + 1;
  }
  double lo = exp_lo;
  double hi = exp_hi;

  double plot_w = kWidth - kMarginLeft - kMarginRight;
  double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double v) {
    return kMarginLeft + (std::log10(v) - lo) / (hi - lo) * plot_w;
  };
  auto sy = [&](double v) {
    return kMarginTop + (hi - std::log10(v)) / (hi - lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  if (!comment.empty()) {
    svg << "<!-- " << comment << " -->\n";
  }
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title
      << "</text>\n";

  // Decade grid.
  for (int e = exp_lo; e <= exp_hi; ++e) {
    double v = std::pow(10.0, e);
    svg << "<line x1=\"" << fmt(sx(v)) << "\" y1=\"" << fmt(kMarginTop)
        << "\" x2=\"" << fmt(sx(v)) << "\" y2=\""
        << fmt(kHeight - kMarginBottom)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(sy(v))
        << "\" x2=\"" << fmt(kWidth - kMarginRight) << "\" y2=\""
        << fmt(sy(v)) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt(sx(v)) << "\" y=\""
        << fmt(kHeight - kMarginBottom + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << decade_label(e) << "</text>\n";
    svg << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\""
        << fmt(sy(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << decade_label(e) << "</text>\n";
  }

  // Frame and axis labels.
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
      << kHeight - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << x_label << "</text>\n";
  svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << kMarginTop + plot_h / 2 << ")\">" << y_label << "</text>\n";

  // Uncoded reference: the identity line in log-log space.
  svg << "<line x1=\"" << fmt(sx(std::pow(10.0, exp_lo))) << "\" y1=\""
      << fmt(sy(std::pow(10.0, exp_lo))) << "\" x2=\""
      << fmt(sx(std::pow(10.0, exp_hi))) << "\" y2=\""
      << fmt(sy(std::pow(10.0, exp_hi)))
      << "\" stroke=\"#2ca02c\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 3\"/>\n";

  for (size_t i = 0; i < series.size(); ++i) {
    const char *color = kPalette[i % (sizeof(kPalette) / sizeof(*kPalette))];
    std::ostringstream pts;
    for (auto [x, y] : series[i].points) {
      if (x <= 0 || y <= 0) {
        continue;  // zero-failure points have no log-log position
      }
      pts << fmt(sx(x)) << "," << fmt(sy(y)) << " ";
    }
    svg << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"1.5\"/>\n";
    for (auto [x, y] : series[i].points) {
      if (x <= 0 || y <= 0) {
        continue;
      }
      svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    double ly = kMarginTop + 16 + 18 * static_cast<double>(i);
    svg << "<line x1=\"" << kWidth - kMarginRight + 12 << "\" y1=\"" << ly - 4
        << "\" x2=\"" << kWidth - kMarginRight + 34 << "\" y2=\"" << ly - 4
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << kWidth - kMarginRight + 40 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << series[i].label << "</text>\n";
  }
  double ly = kMarginTop + 16 + 18 * static_cast<double>(series.size());
  svg << "<line x1=\"" << kWidth - kMarginRight + 12 << "\" y1=\"" << ly - 4
      << "\" x2=\"" << kWidth - kMarginRight + 34 << "\" y2=\"" << ly - 4
      << "\" stroke=\"#2ca02c\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 3\"/>\n";
  svg << "<text x=\"" << kWidth - kMarginRight + 40 << "\" y=\"" << ly
      << "\" font-family=\"sans-serif\" font-size=\"12\">uncoded</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace psc
