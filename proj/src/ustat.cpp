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

#include "wcre/ustat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <vector>

#include "wcre/egf.hpp"
#include "wcre/error.hpp"
#include "wcre/numeric.hpp"
#include "wcre/parallel.hpp"
#include "wcre/quadrature.hpp"

namespace wcre {
namespace {

void require_order(int s) {
  if (s < 1) throw InvalidArgument(fmt::format("departure order s = {} must be a positive integer", s));
}

void require_size(std::size_t n, int s) {
  if (n < static_cast<std::size_t>(s) + 1) {
    throw InvalidArgument(fmt::format("U-statistic of order s = {} needs n >= {}, got n = {}", s, s + 1, n));
  }
}

// U_m over sorted values.
double order_statistic_mean(std::span<const double> sorted, int m) {
  const std::size_t n = sorted.size();
  const std::size_t last = n - static_cast<std::size_t>(m);  // zero-based index of the last term
  CompensatedSum sum;
  double weight = static_cast<double>(m) / static_cast<double>(n);
  for (std::size_t i = 0; i <= last; ++i) {
    sum += weight * sorted[i] * sorted[i];
    // C(n-i-2, m-1) / C(n-i-1, m-1) in one-based terms.
    const double remaining = static_cast<double>(n - i - 1);
    weight *= (remaining - static_cast<double>(m) + 1.0) / remaining;
  }
  return sum.value();
}

QuadratureOptions inner_options() {
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-15;
  return opts;
}

// int_lower^x y^2 S(y)^m f(y) dy
double truncated_moment(const Distribution& dist, int power, double x) {
  const double lower = dist.support().lower;
  const double upper = std::min(x, dist.support().upper);
  if (!(upper > lower)) return 0.0;
  auto integrand = [&dist, power](double y) {
    const double f = dist.density(y);
    if (f == 0.0) return 0.0;
    return y * y * std::pow(dist.survival(y), power) * f;
  };
  const auto r = integrate(integrand, lower, upper, inner_options());
  if (!r.converged) throw NumericalError("g1_conditional: inner integral did not converge");
  return r.value;
}

}  // namespace

std::string_view to_string(DeltaMethod method) noexcept {
  return method == DeltaMethod::kBruteForce ? "brute_force" : "order_statistic";
}

double population_delta(const Distribution& dist, int s) {
  require_order(s);
  const double sd = static_cast<double>(s);
  return 0.5 * (sd + 1.0) * second_moment_of_min(dist, sd + 1.0) -
         0.5 * sd * second_moment_of_min(dist, sd);
}

double kernel_h1(std::span<const double> values, int s) {
  require_order(s);
  if (values.size() != static_cast<std::size_t>(s) + 1) {
    throw InvalidArgument(fmt::format("kernel_h1: expected {} arguments, got {}", s + 1, values.size()));
  }
  const double sd = static_cast<double>(s);
  const double all_min = *std::min_element(values.begin(), values.end());
  double subsets = 0.0;
  for (std::size_t drop = 0; drop < values.size(); ++drop) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j != drop) m = std::min(m, values[j]);
    }
    subsets += sd * m * m;
  }
  return 0.5 * (sd + 1.0) * all_min * all_min - subsets / (2.0 * (sd + 1.0));
}

DeltaEstimate delta_hat_brute(const Sample& sample, int s, unsigned workers) {
  require_order(s);
  require_size(sample.size(), s);
  const auto x = sample.values();
  const std::size_t n = x.size();
  const std::size_t k = static_cast<std::size_t>(s) + 1;

  // partial[i]: kernel sum over subsets whose smallest index is i.
  std::vector<CompensatedSum> partial(n);
  std::vector<double> counts(n, 0.0);
  parallel_for(n - k + 1, workers, [&](std::size_t first) {
    std::vector<std::size_t> idx(k);
    std::vector<double> args(k);
    idx[0] = first;
    for (std::size_t j = 1; j < k; ++j) idx[j] = first + j;
    CompensatedSum sum;
    double count = 0.0;
    while (true) {
      for (std::size_t j = 0; j < k; ++j) args[j] = x[idx[j]];
      sum += kernel_h1(args, s);
      count += 1.0;
      // Advance idx[1..k-1] lexicographically, idx[0] fixed.
      std::size_t j = k - 1;
      while (j >= 1 && idx[j] == n - k + j) --j;
      if (j == 0) break;
      ++idx[j];
      for (std::size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    partial[first] = sum;
    counts[first] = count;
  });
  CompensatedSum total;
  double count = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += partial[i];
    count += counts[i];
  }
  return {total.value() / count, n, s, DeltaMethod::kBruteForce};
}

double delta_hat_sorted(std::span<const double> sorted, int s) {
  require_order(s);
  require_size(sorted.size(), s);
  const double sd = static_cast<double>(s);
  return 0.5 * (sd + 1.0) * order_statistic_mean(sorted, s + 1) -
         0.5 * sd * order_statistic_mean(sorted, s);
}

DeltaEstimate delta_hat_fast(const Sample& sample, int s) {
  return {delta_hat_sorted(sample.values(), s), sample.size(), s, DeltaMethod::kOrderStatistic};
}

double g1_conditional(const Distribution& dist, int s, double x) {
  require_order(s);
  const double sd = static_cast<double>(s);
  const double surv = dist.survival(x);
  const double x2 = x * x;
  const double k = second_moment_of_min(dist, sd);
  double g = 0.5 * (sd + 1.0) * x2 * std::pow(surv, sd) +
             0.5 * sd * (sd + 1.0) * truncated_moment(dist, s - 1, x) -
             sd * sd / (2.0 * (sd + 1.0)) * x2 * std::pow(surv, sd - 1.0) -
             sd * k / (2.0 * (sd + 1.0));
  if (s >= 2) {
    g -= sd * sd * (sd - 1.0) / (2.0 * (sd + 1.0)) * truncated_moment(dist, s - 2, x);
  }
  return g;
}

AsymptoticVariance asymptotic_variance(const Distribution& dist, int s) {
  require_order(s);
  // Fourth-moment-type integrals; heavy tails fail here rather than later.
  if (dist.family() == Family::kPareto || dist.family() == Family::kLomax) {
    if (!(dist.param1() > 4.0)) {
      throw DivergenceError(fmt::format("asymptotic_variance: {} lacks a fourth moment", dist.name()));
    }
  }
  const auto sup = dist.support();
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  // Absolute floor in the units of g1, whose mean vanishes under H0.
  opts.abs_tol = 1e-12 * second_moment_of_min(dist, static_cast<double>(s));
  opts.tail_scale = dist.scale_hint();
  const std::array<double, 1> bp = {sup.lower + dist.scale_hint()};
  auto weighted = [&](double centre, int power) {
    return integrate(
        [&, centre, power](double x) {
          const double f = dist.density(x);
          if (f == 0.0) return 0.0;
          return std::pow(g1_conditional(dist, s, x) - centre, power) * f;
        },
        sup.lower, sup.upper, opts, bp);
  };
  const auto mean = weighted(0.0, 1);
  const auto var = weighted(mean.value, 2);
  if (!mean.converged || !var.converged || !std::isfinite(var.value)) {
    throw NumericalError(fmt::format("asymptotic_variance: integrals for {} did not converge", dist.name()));
  }
  const double sd = static_cast<double>(s);
  return {var.value, (sd + 1.0) * (sd + 1.0) * var.value};
}

}  // namespace wcre
