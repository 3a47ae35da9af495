// Copyright 2026 The wcre Authors
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

#include "wcre/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "wcre/egf.hpp"
#include "wcre/error.hpp"

namespace wcre {
namespace {

constexpr double kRelativeStep = 1e-5;
constexpr double kStepFloor = 1e-6;
constexpr double kNegativeHazardTolerance = 1e-6;
constexpr double kCellTolerance = 1e-10;
constexpr int kMaxDepth = 40;

double derivative(const AgeCurve& c, double t) {
  const double h = std::max(kRelativeStep * t, kStepFloor);
  if (t - h < 0.0) {
    return (-3.0 * c(t) + 4.0 * c(t + h) - c(t + 2.0 * h)) / (2.0 * h);
  }
  return (c(t + h) - c(t - h)) / (2.0 * h);
}

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double fa, double m, double fm, double b,
                        double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

CurveOnGrid::CurveOnGrid(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() != values_.size()) throw InvalidArgument("CurveOnGrid: length mismatch");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!(grid_[i] >= 0.0) || (i > 0 && !(grid_[i] > grid_[i - 1]))) {
      throw InvalidArgument("CurveOnGrid: grid must be non-negative and strictly increasing");
    }
  }
}

AgeCurve dwcregf_curve(const Distribution& dist, double s) {
  return [dist, s](double t) { return dwcregf(dist, s, t).value; };
}

double hazard_from_dwcregf(const AgeCurve& curve, double s, double t) {
  if (!(s > 0.0)) throw InvalidArgument("hazard_from_dwcregf: s must be positive");
  if (!(t >= 0.0)) throw InvalidArgument("hazard_from_dwcregf: t must be >= 0");
  const double c = curve(t);
  if (!(c > 0.0)) {
    throw InvalidArgument(fmt::format("hazard_from_dwcregf: C(t) = {} is not positive at t = {}", c, t));
  }
  const double h = (t + derivative(curve, t)) / (s * c);
  if (h < -kNegativeHazardTolerance) {
    throw NumericalError(
        fmt::format("hazard_from_dwcregf: negative hazard {} at t = {}; inconsistent curve", h, t));
  }
  return std::max(h, 0.0);
}

CurveOnGrid reconstruct_survival(const AgeCurve& curve, double s, std::span<const double> grid) {
  if (grid.empty() || grid.front() != 0.0) {
    throw InvalidArgument("reconstruct_survival: grid must start at 0");
  }
  auto hazard = [&](double t) { return hazard_from_dwcregf(curve, s, t); };
  std::vector<double> values;
  values.reserve(grid.size());
  values.push_back(1.0);
  double cumulative = 0.0;
  double h_left = hazard(grid[0]);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double a = grid[k - 1];
    const double b = grid[k];
    if (!(b > a)) throw InvalidArgument("reconstruct_survival: grid must be strictly increasing");
    const double m = 0.5 * (a + b);
    const double h_mid = hazard(m);
    const double h_right = hazard(b);
    const double whole = simpson(a, h_left, h_mid, b, h_right);
    cumulative += adaptive_simpson(hazard, a, h_left, m, h_mid, b, h_right, whole,
                                   kCellTolerance * std::max(1.0, b - a), kMaxDepth);
    values.push_back(std::exp(-cumulative));
    h_left = h_right;
  }
  return CurveOnGrid(std::vector<double>(grid.begin(), grid.end()), std::move(values));
}

std::vector<double> default_grid(const Distribution& dist, std::size_t points, double upper_prob) {
  if (points < 2) throw InvalidArgument("default_grid: need at least two points");
  const double top = dist.quantile(upper_prob);
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = top * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

double constancy_index(const Distribution& dist, double s, std::span<const double> grid) {
  const double reference = dwcregf(dist, s, 0.0).value;
  double worst = 0.0;
  for (double t : grid) {
    worst = std::max(worst, std::fabs(dwcregf(dist, s, t).value - reference) / reference);
  }
  return worst;
}

double wmrl_identity_gap(const Distribution& dist, double s, std::span<const double> grid) {
  double worst = 0.0;
  for (double t : grid) {
    const double m = wmrl(dist, t);
    worst = std::max(worst, std::fabs(s * dwcregf(dist, s, t).value - m) / m);
  }
  return worst;
}

}  // namespace wcre
