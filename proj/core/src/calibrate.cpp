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

#include "splitshower/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "splitshower/entanglement.hpp"
#include "splitshower/error.hpp"

namespace splitshower::calibrate {

namespace {

constexpr double kArgSlack = 1e-12;
constexpr double kGridStep = 1e-3;
constexpr int kMinGridCells = 2000;

double bisect(double lo, double hi, double glo, double z) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const double gm = matching_residual(mid, z);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimum of matching_residual on [a, b].
double golden_min(double a, double b, double z) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = matching_residual(c, z);
  double fd = matching_residual(d, z);
  while (b - a > kBisectionWidth) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = matching_residual(c, z);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = matching_residual(d, z);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double gamma3_of(double gamma1, double z) {
  const double denom = 1.0 / std::cos(gamma1) - 2.0;
  const double num = 2.0 * (z - 0.5);
  if (denom == 0.0) {
    if (num == 0.0) return std::numbers::pi / 2.0;
    throw Error(ErrorCode::ArccosDomain, fmt::format("sec(gamma1) = 2 with z = {:.17g}", z));
  }
  double arg = num / denom;
  if (std::abs(arg) > 1.0 + kArgSlack || !std::isfinite(arg)) {
    throw Error(ErrorCode::ArccosDomain,
                fmt::format("arccos argument {:.17g} (gamma1 = {:.17g}, z = {:.17g})", arg, gamma1, z));
  }
  arg = std::clamp(arg, -1.0, 1.0);
  return std::acos(arg);
}

double gamma1_upper(double z) { return std::acos(1.0 / (3.0 - 2.0 * z)); }

double matching_residual(double gamma1, double z) {
  const double g3 = gamma3_of(gamma1, z);
  const double rad = entanglement::c_circuit_radicand(gamma1, g3);
  const double circuit = rad >= 0.0 ? std::sqrt(rad) : -std::sqrt(-rad);
  return circuit - entanglement::c_qcd(z).value();
}

splitter::SplittingParams solve_params(double z) {
  if (z == 0.5) {
    throw Error(ErrorCode::CalibrationInfeasible, "z = 0.5 leaves no strict ordering of the daughters");
  }
  if (!(z > 0.5 && z <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, fmt::format("z = {:.17g} outside (0.5, 1]", z));
  }
  if (z == 1.0) return splitter::SplittingParams::from_gamma1_gamma3(0.0, std::numbers::pi);

  const double hi = gamma1_upper(z);
  const int cells = std::max(kMinGridCells, static_cast<int>(std::ceil(hi / kGridStep)));
  const double step = hi / cells;

  double prev_x = 0.0;
  double prev_g = matching_residual(0.0, z);
  double best_x = prev_x;
  double best_g = prev_g;
  int best_i = 0;
  for (int i = 1; i <= cells; ++i) {
    const double x = i == cells ? hi : i * step;
    const double g = matching_residual(x, z);
    if (g == 0.0) return splitter::SplittingParams::from_gamma1_gamma3(x, gamma3_of(x, z));
    if ((g < 0.0) != (prev_g < 0.0)) {
      const double root = bisect(prev_x, x, prev_g, z);
      return splitter::SplittingParams::from_gamma1_gamma3(root, gamma3_of(root, z));
    }
    if (g < best_g) {
      best_g = g;
      best_x = x;
      best_i = i;
    }
    prev_x = x;
    prev_g = g;
  }

  // A narrow dip can hide between grid nodes; refine around the minimum.
  const double lo = std::max(0.0, (best_i - 1) * step);
  const double up = std::min(hi, (best_i + 1) * step);
  const double xm = golden_min(lo, up, z);
  const double gm = matching_residual(xm, z);
  if (gm < 0.0) {
    const double root = bisect(lo, xm, matching_residual(lo, z), z);
    return splitter::SplittingParams::from_gamma1_gamma3(root, gamma3_of(root, z));
  }
  if (gm <= kResidualTol) return splitter::SplittingParams::from_gamma1_gamma3(xm, gamma3_of(xm, z));
  (void)best_x;
  throw Error(ErrorCode::CalibrationInfeasible,
              fmt::format("no concurrence match for z = {:.17g} (min residual {:.3g})", z, gm));
}

CalibrationRecord make_record(double z, const splitter::SplittingParams& params) {
  const double rz = params.z() - z;
  const double rc =
      entanglement::c_circuit(params.gamma1(), params.gamma3()).value() - entanglement::c_qcd(z).value();
  return {z, params, rz, rc};
}

ParamDistribution calibrate_dataset(std::span<const double> zs, std::string source) {
  if (zs.empty()) throw Error(ErrorCode::EmptyDataset, "no z values to calibrate");
  ParamDistribution out;
  out.source = std::move(source);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    double z = zs[i];
    if (z >= 0.0 && z < 0.5) {
      z = 1.0 - z;
      ++out.reflected;
    }
    try {
      out.records.push_back(make_record(z, solve_params(z)));
    } catch (const Error& e) {
      out.rejected.push_back({i, zs[i], e.what()});
    }
  }
  return out;
}

}  // namespace splitshower::calibrate
