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

#include "wcre/egf.hpp"

#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

#include "wcre/error.hpp"
#include "wcre/numeric.hpp"
#include "wcre/quadrature.hpp"

namespace wcre {
namespace {

constexpr double kFiniteDifferenceStep = 1e-4;

QuadratureOptions egf_quadrature_options(double scale) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-300;
  opts.max_intervals = 8000;
  opts.tail_scale = scale;
  return opts;
}

void require_order(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidArgument(fmt::format("generating function order s = {} must be positive", s));
  }
}

EgfValue checked(const QuadratureResult& r, const char* what) {
  if (!r.converged || !(r.abs_error <= kEgfRelTolerance * std::fabs(r.value))) {
    throw NumericalError(fmt::format("{}: quadrature reached error {:.3g} on value {:.17g}",
                                     what, r.abs_error, r.value));
  }
  return {r.value, EgfMethod::kQuadrature, r.abs_error};
}

bool has_closed_form(Family f) {
  switch (f) {
    case Family::kUniform:
    case Family::kExponential:
    case Family::kPareto:
    case Family::kLomax:
    case Family::kRayleigh:
      return true;
    default:
      return false;
  }
}

// Heavy-tailed families: int x^k S^s converges iff shape * s > k + 1.
void require_convergent(const Distribution& dist, double s, int power_of_x, const char* what) {
  if (dist.family() != Family::kPareto && dist.family() != Family::kLomax) return;
  const double exponent = dist.param1() * s;
  const double needed = static_cast<double>(power_of_x) + 1.0;
  if (!(exponent > needed)) {
    throw DivergenceError(fmt::format("{} of {} diverges at s = {}: requires shape*s > {}", what,
                                      dist.name(), s, needed));
  }
}

std::array<double, 1> bulk_breakpoint(const SurvivalCurve& c) {
  return {c.support.lower + c.scale};
}

}  // namespace

std::string_view to_string(EgfMethod method) noexcept {
  switch (method) {
    case EgfMethod::kClosedForm:
      return "closed_form";
    case EgfMethod::kQuadrature:
      return "quadrature";
    case EgfMethod::kEmpirical:
      return "empirical";
  }
  return "unknown";
}

SurvivalCurve SurvivalCurve::of(const Distribution& dist) {
  return {[dist](double x) { return dist.log_survival(x); }, dist.support(), dist.scale_hint()};
}

EgfValue quadrature_wcregf(const SurvivalCurve& curve, double s) {
  require_order(s);
  const auto& log_s = curve.log_survival;
  auto integrand = [&](double x) {
    const double ls = log_s(x);
    return ls == -std::numeric_limits<double>::infinity() ? 0.0 : x * std::exp(s * ls);
  };
  const auto bp = bulk_breakpoint(curve);
  return checked(integrate(integrand, curve.support.lower, curve.support.upper,
                           egf_quadrature_options(curve.scale), bp),
                 "wcregf");
}

EgfValue quadrature_cregf(const SurvivalCurve& curve, double s) {
  require_order(s);
  const auto& log_s = curve.log_survival;
  auto integrand = [&](double x) {
    const double ls = log_s(x);
    return ls == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(s * ls);
  };
  const auto bp = bulk_breakpoint(curve);
  return checked(integrate(integrand, curve.support.lower, curve.support.upper,
                           egf_quadrature_options(curve.scale), bp),
                 "cregf");
}

EgfValue quadrature_dwcregf(const SurvivalCurve& curve, double s, double t) {
  require_order(s);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("dwcregf: age t must be >= 0");
  const double log_st = curve.log_survival(t);
  if (log_st == -std::numeric_limits<double>::infinity() || t >= curve.support.upper) {
    throw DomainError(fmt::format("dwcregf: survival is zero at t = {}", t));
  }
  const auto& log_s = curve.log_survival;
  auto integrand = [&](double x) {
    const double ls = log_s(x);
    return ls == -std::numeric_limits<double>::infinity() ? 0.0
                                                          : x * std::exp(s * (ls - log_st));
  };
  const std::array<double, 2> bp = {curve.support.lower, std::max(t, curve.support.lower) + curve.scale};
  return checked(integrate(integrand, t, curve.support.upper, egf_quadrature_options(curve.scale), bp),
                 "dwcregf");
}

EgfValue wcregf(const Distribution& dist, double s, Evaluation eval) {
  require_order(s);
  require_convergent(dist, s, 1, "wcregf");
  if (eval == Evaluation::kQuadrature || !has_closed_form(dist.family())) {
    return quadrature_wcregf(SurvivalCurve::of(dist), s);
  }
  const double p1 = dist.param1();
  const double p2 = dist.param2();
  double v = 0.0;
  switch (dist.family()) {
    case Family::kUniform:
      v = (p2 - p1) * (p1 * s + p1 + p2) / ((s + 1.0) * (s + 2.0));
      break;
    case Family::kExponential:
      v = 1.0 / (s * s * p1 * p1);
      break;
    case Family::kPareto:
      v = p2 * p2 / (p1 * s - 2.0);
      break;
    case Family::kLomax:
      v = p2 * p2 / ((p1 * s - 2.0) * (p1 * s - 1.0));
      break;
    case Family::kRayleigh:
      v = p1 * p1 / s;
      break;
    default:
      break;
  }
  return {v, EgfMethod::kClosedForm, 0.0};
}

EgfValue cregf(const Distribution& dist, double s, Evaluation eval) {
  require_order(s);
  require_convergent(dist, s, 0, "cregf");
  if (eval == Evaluation::kQuadrature || !has_closed_form(dist.family())) {
    return quadrature_cregf(SurvivalCurve::of(dist), s);
  }
  const double p1 = dist.param1();
  const double p2 = dist.param2();
  double v = 0.0;
  switch (dist.family()) {
    case Family::kUniform:
      v = (p2 - p1) / (s + 1.0);
      break;
    case Family::kExponential:
      v = 1.0 / (s * p1);
      break;
    case Family::kPareto:
      v = p2 / (p1 * s - 1.0);
      break;
    case Family::kLomax:
      v = p2 / (p1 * s - 1.0);
      break;
    case Family::kRayleigh:
      v = p1 * std::sqrt(std::numbers::pi / (2.0 * s));
      break;
    default:
      break;
  }
  return {v, EgfMethod::kClosedForm, 0.0};
}

EgfValue dwcregf(const Distribution& dist, double s, double t, Evaluation eval) {
  require_order(s);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("dwcregf: age t must be >= 0");
  if (!(dist.survival(t) > 0.0)) {
    throw DomainError(fmt::format("dwcregf: survival of {} is zero at t = {}", dist.name(), t));
  }
  require_convergent(dist, s, 1, "dwcregf");
  if (eval == Evaluation::kQuadrature || !has_closed_form(dist.family())) {
    return quadrature_dwcregf(SurvivalCurve::of(dist), s, t);
  }
  const double p1 = dist.param1();
  const double p2 = dist.param2();
  const double lower = dist.support().lower;
  if (t <= lower) {
    // Below the support S = 1, contributing int_t^lower x dx.
    return {0.5 * (lower - t) * (lower + t) + wcregf(dist, s).value, EgfMethod::kClosedForm, 0.0};
  }
  double v = 0.0;
  switch (dist.family()) {
    case Family::kUniform: {
      const double rest = p2 - t;
      v = rest * (t * (s + 2.0) + rest) / ((s + 1.0) * (s + 2.0));
      break;
    }
    case Family::kExponential:
      v = (1.0 + p1 * s * t) / ((s * p1) * (s * p1));
      break;
    case Family::kPareto:
      v = t * t / (p1 * s - 2.0);
      break;
    case Family::kLomax: {
      // Direct integration; reduces to the static closed form at t = 0.
      const double c = p2 + t;
      v = c * c / (p1 * s - 2.0) - p2 * c / (p1 * s - 1.0);
      break;
    }
    case Family::kRayleigh:
      v = p1 * p1 / s;
      break;
    default:
      break;
  }
  return {v, EgfMethod::kClosedForm, 0.0};
}

double wmrl(const Distribution& dist, double t, Evaluation eval) {
  return dwcregf(dist, 1.0, t, eval).value;
}

double second_moment_of_min(const Distribution& dist, double m) {
  const double lower = dist.support().lower;
  return lower * lower + 2.0 * wcregf(dist, m).value;
}

EgfValue empirical_wcregf(const Sample& sample, double s) {
  require_order(s);
  const auto x = sample.values();
  const double n = static_cast<double>(x.size());
  CompensatedSum sum;
  double previous_sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    const double level = static_cast<double>(x.size() - i) / n;
    sum += 0.5 * (sq - previous_sq) * std::pow(level, s);
    previous_sq = sq;
  }
  return {sum.value(), EgfMethod::kEmpirical, 0.0};
}

WeightedCre weighted_cre_via_derivative(const Distribution& dist) {
  constexpr double h = kFiniteDifferenceStep;
  WeightedCre out;
  const double up = wcregf(dist, 1.0 + h).value;
  const double down = wcregf(dist, 1.0 - h).value;
  out.finite_difference = -(up - down) / (2.0 * h);

  const auto sup = dist.support();
  auto integrand = [&](double x) {
    const double ls = dist.log_survival(x);
    if (ls == 0.0 || ls == -std::numeric_limits<double>::infinity()) return 0.0;
    return -x * std::exp(ls) * ls;
  };
  const std::array<double, 1> bp = {sup.lower + dist.scale_hint()};
  out.direct = checked(integrate(integrand, sup.lower, sup.upper,
                                 egf_quadrature_options(dist.scale_hint()), bp),
                       "weighted_cre")
                   .value;
  out.gap = std::fabs(out.finite_difference - out.direct);
  return out;
}

EntropyBound entropy_bound_check(const Distribution& dist, double s) {
  EntropyBound out;
  out.lhs = wcregf(dist, s).value;
  const auto sup = dist.support();
  const std::array<double, 1> bp = {sup.lower + dist.scale_hint()};
  auto opts = egf_quadrature_options(dist.scale_hint());
  // Log moments may be near zero; an absolute floor keeps them attainable.
  opts.abs_tol = 1e-14;
  auto weighted = [&](auto term) {
    return [&dist, term](double x) {
      const double f = dist.density(x);
      if (f == 0.0) return 0.0;
      return f * term(x, dist.log_density(x));
    };
  };
  const auto entropy = integrate(weighted([](double, double lf) { return -lf; }), sup.lower,
                                 sup.upper, opts, bp);
  const auto mean_log = integrate(weighted([](double x, double) { return std::log(x); }),
                                  sup.lower, sup.upper, opts, bp);
  // One integral for the exponent keeps cancellation out of the tight cases.
  const auto exponent = integrate(
      weighted([](double x, double lf) { return std::log(x) - lf; }), sup.lower, sup.upper,
      opts, bp);
  for (const auto* r : {&entropy, &mean_log, &exponent}) {
    if (!r->converged || !std::isfinite(r->value)) {
      throw NumericalError(
          fmt::format("entropy_bound_check: log moments of {} are not integrable", dist.name()));
    }
  }
  out.entropy = entropy.value;
  out.mean_log = mean_log.value;
  out.rhs = std::exp(exponent.value - s);
  out.holds = out.lhs >= out.rhs - 1e-12;
  return out;
}

}  // namespace wcre
