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

#ifndef WCRE_QUADRATURE_HPP_
#define WCRE_QUADRATURE_HPP_

#include <functional>
#include <span>

namespace wcre {

struct QuadratureOptions {
  double rel_tol = 1e-11;
  double abs_tol = 0.0;
  int max_intervals = 5000;
  // Length scale c of the tail map x = B + c (1 - u) / u used past the last
  // finite point B. Non-positive means "pick max(1, |B|)".
  double tail_scale = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
//
// b may be +infinity. The range is cut at the (sorted, in-range) breakpoints;
// every finite piece is integrated directly and the piece [B, inf) is mapped
// onto u in (0, 1] through x = B + c (1 - u) / u, so that algebraic tails
// become integrable endpoint singularities at u = 0, where doubles are dense.
// Subintervals from all pieces share one priority queue keyed on their error
// estimate; refinement stops once the summed estimate drops below
// max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {},
                           std::span<const double> breakpoints = {});

}  // namespace wcre

#endif  // WCRE_QUADRATURE_HPP_
