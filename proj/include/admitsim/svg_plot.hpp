// Copyright 2026 The admitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADMITSIM_SVG_PLOT_HPP_
#define ADMITSIM_SVG_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace admitsim {

struct SvgSeries {
  std::string label;
  std::string color;  // CSS color
  bool dashed = false;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

/// Writes a single-panel line plot as a self-contained SVG file.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, int width = 920, int height = 460);

}  // namespace admitsim

#endif  // ADMITSIM_SVG_PLOT_HPP_
