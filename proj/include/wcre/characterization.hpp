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

#ifndef WCRE_CHARACTERIZATION_HPP_
#define WCRE_CHARACTERIZATION_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wcre/distributions.hpp"

namespace wcre {

// A dynamic generating function as a function of age, t -> C_s(W, X; t).
using AgeCurve = std::function<double(double)>;

// Values on a strictly increasing grid of non-negative points.
class CurveOnGrid {
 public:
  // Throws InvalidArgument unless the grid is strictly increasing,
  // non-negative and as long as values.
  CurveOnGrid(std::vector<double> grid, std::vector<double> values);

  [[nodiscard]] std::span<const double> grid() const noexcept { return grid_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return grid_.size(); }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
};

// The closed-form (falling back to quadrature) dynamic WCREGF of dist.
AgeCurve dwcregf_curve(const Distribution& dist, double s);

// h(t) = (t + C'(t)) / (s C(t)) with C' by central differences, step
// max(1e-5 t, 1e-6); a second-order forward difference is used where the
// central stencil would cross t = 0. Throws InvalidArgument for C(t) <= 0
// and NumericalError for a hazard below -1e-6. Small negative noise is
// clipped to 0.
double hazard_from_dwcregf(const AgeCurve& curve, double s, double t);

// S(x) = exp(-int_0^x h) on the grid. Each grid cell is integrated with
// adaptive Simpson refinement, so kinks and the region near 0 are subdivided
// as needed. The grid must start at 0. C is evaluated single-threaded.
CurveOnGrid reconstruct_survival(const AgeCurve& curve, double s, std::span<const double> grid);

// points evenly spaced values from 0 to quantile(upper_prob).
std::vector<double> default_grid(const Distribution& dist, std::size_t points = 200,
                                 double upper_prob = 0.99);

// max_t |C(t) - C(0)| / C(0); zero exactly for Rayleigh laws.
double constancy_index(const Distribution& dist, double s, std::span<const double> grid);

// max_t |s C_s(W, X; t) - m(t)| / m(t); zero for Rayleigh laws or s = 1.
double wmrl_identity_gap(const Distribution& dist, double s, std::span<const double> grid);

}  // namespace wcre

#endif  // WCRE_CHARACTERIZATION_HPP_
