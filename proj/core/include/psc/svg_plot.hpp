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

#ifndef PSC_SVG_PLOT_HPP
#define PSC_SVG_PLOT_HPP

#include <string>
#include <utility>
#include <vector>

namespace psc {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), positive
};

/// Static log-log plot with decade grid lines and the identity line y = x
/// (the uncoded reference). Deterministic output; `comment` is embedded as
/// an XML comment (fingerprint/seed provenance).
std::string render_loglog_svg(const std::vector<PlotSeries> &series,
                              const std::string &title,
                              const std::string &x_label,
                              const std::string &y_label,
                              const std::string &comment = "");

}  // namespace psc

#endif
