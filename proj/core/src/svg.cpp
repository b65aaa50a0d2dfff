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

#include "splitshower/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::svg {

namespace {

constexpr double kW = 640, kH = 420, kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
constexpr const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

struct Frame {
  double x0, x1, y0, y1;
  double sx(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kW - kLeft - kRight); }
  double sy(double y) const { return kH - kBottom - (y - y0) / (y1 - y0) * (kH - kTop - kBottom); }
};

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

std::string header(const std::string& title, const Frame& f, const std::string& xl, const std::string& yl) {
  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
      "font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kW, kH);
  s += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n", kW / 2,
                   escape(title));
  s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", kLeft,
                   kTop, kW - kLeft - kRight, kH - kTop - kBottom);
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 4.0;
    const double yv = f.y0 + (f.y1 - f.y0) * i / 4.0;
    s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.3g}</text>\n", f.sx(xv),
                     kH - kBottom + 16, xv);
    s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", kLeft - 4,
                     f.sy(yv) + 4, yv);
  }
  s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kW / 2, kH - 12, escape(xl));
  if (!yl.empty()) {
    s += fmt::format("<text x=\"14\" y=\"{}\" transform=\"rotate(-90 14 {})\" text-anchor=\"middle\">{}</text>\n",
                     kH / 2, kH / 2, escape(yl));
  }
  return s;
}

std::string legend_entry(std::size_t i, const std::string& label) {
  const double y = kTop + 14 + 16 * static_cast<double>(i);
  const double x = kW - kRight - 150;
  return fmt::format(
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>"
      "<text x=\"{}\" y=\"{}\">{}</text>\n",
      x, y, x + 20, y, kColours[i % 6], x + 26, y + 4, escape(label));
}

}  // namespace

std::string step_plot(const std::string& title, const std::string& x_label, const std::vector<StepSeries>& series) {
  Frame f{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(), 0.0, 0.0};
  for (const auto& s : series) {
    if (s.edges.empty()) continue;
    f.x0 = std::min(f.x0, s.edges.front());
    f.x1 = std::max(f.x1, s.edges.back());
    for (double h : s.heights) f.y1 = std::max(f.y1, h);
  }
  if (!(f.x1 > f.x0)) f = {0.0, 1.0, 0.0, 1.0};
  if (!(f.y1 > 0.0)) f.y1 = 1.0;
  f.y1 *= 1.1;
  std::string out = header(title, f, x_label, "density");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    if (s.heights.empty()) continue;
    std::string pts = fmt::format("{:.2f},{:.2f}", f.sx(s.edges[0]), f.sy(0.0));
    for (std::size_t b = 0; b < s.heights.size(); ++b) {
      pts += fmt::format(" {:.2f},{:.2f} {:.2f},{:.2f}", f.sx(s.edges[b]), f.sy(s.heights[b]), f.sx(s.edges[b + 1]),
                         f.sy(s.heights[b]));
    }
    pts += fmt::format(" {:.2f},{:.2f}", f.sx(s.edges.back()), f.sy(0.0));
    out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                       kColours[i % 6], pts);
    out += legend_entry(i, s.label);
  }
  return out + "</svg>\n";
}

std::string curve_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<CurveSeries>& series) {
  Frame f{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(), 0.0,
          std::numeric_limits<double>::lowest()};
  for (const auto& s : series) {
    for (double x : s.xs) {
      f.x0 = std::min(f.x0, x);
      f.x1 = std::max(f.x1, x);
    }
    for (double y : s.ys) f.y1 = std::max(f.y1, y);
  }
  if (!(f.x1 > f.x0)) {
    const double c = f.x0 == std::numeric_limits<double>::max() ? 0.5 : f.x0;
    f.x0 = c - 0.5;
    f.x1 = c + 0.5;
  }
  if (!(f.y1 > 0.0)) f.y1 = 1.0;
  f.y1 *= 1.1;
  std::string out = header(title, f, x_label, y_label);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* colour = kColours[i % 6];
    if (s.markers) {
      for (std::size_t k = 0; k < s.xs.size(); ++k) {
        out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n", f.sx(s.xs[k]),
                           f.sy(s.ys[k]), colour);
      }
    } else {
      std::string pts;
      for (std::size_t k = 0; k < s.xs.size(); ++k)
        pts += fmt::format("{}{:.2f},{:.2f}", k ? " " : "", f.sx(s.xs[k]), f.sy(s.ys[k]));
      out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", colour, pts);
    }
    out += legend_entry(i, s.label);
  }
  return out + "</svg>\n";
}

void write_file(const std::string& path, const std::string& svg) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::Io, fmt::format("cannot open '{}' for writing", path));
  f << svg;
}

}  // namespace splitshower::svg
