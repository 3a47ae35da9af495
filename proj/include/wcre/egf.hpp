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

#ifndef WCRE_EGF_HPP_
#define WCRE_EGF_HPP_

#include <functional>
#include <string_view>

#include "wcre/distributions.hpp"
#include "wcre/sample.hpp"

namespace wcre {

// Cumulative residual entropy generating functions.
//
//   cumulative residual   C_s(F)       = int S(x)^s dx
//   weighted              C_s(W, F)    = int x S(x)^s dx
//   dynamic weighted      C_s(W, X; t) = int_t^inf x (S(x) / S(t))^s dx
//   weighted mean residual life m(t)   = C_1(W, X; t)
//
// The static functionals integrate over the support [lower, upper] of the
// law, which is [0, inf) for every family except Uniform(a, b) with a > 0
// and Pareto. This is the convention under which the tabulated closed forms
// hold. The dynamic functionals integrate over [t, inf) for any age t >= 0,
// so C_s(W, X; lower) = C_s(W, F) and the hazard relation
//   h(t) = (t + C'(t)) / (s C(t))
// holds for every t, including ages below the support.

enum class EgfMethod { kClosedForm, kQuadrature, kEmpirical };

std::string_view to_string(EgfMethod method) noexcept;

struct EgfValue {
  double value = 0.0;
  EgfMethod method = EgfMethod::kClosedForm;
  double estimated_abs_error = 0.0;
};

// kAuto uses the closed form when the family has one, else quadrature.
enum class Evaluation { kAuto, kQuadrature };

// Relative accuracy promised by every quadrature-backed EgfValue.
inline constexpr double kEgfRelTolerance = 1e-9;

// s must be > 0. Throws DivergenceError when the integral is infinite
// (Pareto shape*s <= 2, Lomax shape*s <= 2; <= 1 for cregf) and
// NumericalError when quadrature misses kEgfRelTolerance.
EgfValue wcregf(const Distribution& dist, double s, Evaluation eval = Evaluation::kAuto);
EgfValue cregf(const Distribution& dist, double s, Evaluation eval = Evaluation::kAuto);
// Additionally requires t >= 0 and survival(t) > 0 (DomainError otherwise).
EgfValue dwcregf(const Distribution& dist, double s, double t,
                 Evaluation eval = Evaluation::kAuto);
double wmrl(const Distribution& dist, double t, Evaluation eval = Evaluation::kAuto);

// E[min(X_1..X_m)^2] = lower^2 + 2 C_m(W, F).
double second_moment_of_min(const Distribution& dist, double m);

// Plug-in WCREGF of the right-continuous empirical survival function,
// integrated exactly over [0, inf).
EgfValue empirical_wcregf(const Sample& sample, double s);

// A survival curve given through its logarithm, for functionals of laws
// that are not in the catalogue (transforms, powers of survival functions).
struct SurvivalCurve {
  std::function<double(double)> log_survival;
  Support support;
  double scale = 1.0;  // bulk length scale, used for breakpoints

  static SurvivalCurve of(const Distribution& dist);
};

EgfValue quadrature_wcregf(const SurvivalCurve& curve, double s);
EgfValue quadrature_cregf(const SurvivalCurve& curve, double s);
EgfValue quadrature_dwcregf(const SurvivalCurve& curve, double s, double t);

// Weighted cumulative residual entropy -int x S log S, two ways.
struct WeightedCre {
  double finite_difference = 0.0;  // -(C_{1+h} - C_{1-h}) / 2h, h = 1e-4
  double direct = 0.0;             // quadrature of -x S log S
  double gap = 0.0;
};

WeightedCre weighted_cre_via_derivative(const Distribution& dist);

// Lower bound C_s(W, F) >= exp(H + E log X - s), H the Shannon entropy.
struct EntropyBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double entropy = 0.0;
  double mean_log = 0.0;
};

EntropyBound entropy_bound_check(const Distribution& dist, double s);

}  // namespace wcre

#endif  // WCRE_EGF_HPP_
