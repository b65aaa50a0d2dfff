// Copyright 2026 The splitshower Authors
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

#pragma once

#include <string>
#include <vector>

namespace splitshower::svg {

struct StepSeries {
  std::string label;
  std::vector<double> edges;
  std::vector<double> heights;
};

struct CurveSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  bool markers = false;  // dots instead of a polyline
};

/// Overlaid step histograms with a legend.
std::string step_plot(const std::string& title, const std::string& x_label,
                      const std::vector<StepSeries>& series);

std::string curve_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<CurveSeries>& series);

/// Throws Io.
void write_file(const std::string& path, const std::string& svg);

}  // namespace splitshower::svg
