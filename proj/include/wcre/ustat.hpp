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

#ifndef WCRE_USTAT_HPP_
#define WCRE_USTAT_HPP_

#include <cstddef>
#include <span>
#include <string_view>

#include "wcre/distributions.hpp"
#include "wcre/sample.hpp"

namespace wcre {

// The departure measure of order s (a positive integer):
//
//   Delta(F) = (s+1)/2 E[min(X_1..X_{s+1})^2] - s/2 E[min(X_1..X_s)^2],
//
// zero for every Rayleigh law, and its U-statistic estimator built on the
// degree-(s+1) kernel
//
//   h1(x_1..x_{s+1}) = (s+1)/2 min(x)^2
//                      - 1/(2(s+1)) sum over s-subsets of s min(subset)^2.

enum class DeltaMethod { kBruteForce, kOrderStatistic };

std::string_view to_string(DeltaMethod method) noexcept;

struct DeltaEstimate {
  double value = 0.0;
  std::size_t n = 0;
  int s = 1;
  DeltaMethod method = DeltaMethod::kOrderStatistic;
};

// Via E[min_m^2] = lower^2 + 2 C_m(W, F). Throws DivergenceError when the
// second moment is infinite.
double population_delta(const Distribution& dist, int s);

// values.size() must be s + 1.
double kernel_h1(std::span<const double> values, int s);

// Average of kernel_h1 over all C(n, s+1) subsets; meant for small n. Work
// is split by the smallest subset index, and partial sums are combined in
// index order so the result does not depend on workers.
DeltaEstimate delta_hat_brute(const Sample& sample, int s, unsigned workers = 1);

// Same estimator in O(n) on the order statistics:
//   U_m = sum_i C(n-i, m-1) / C(n, m) X_(i)^2,
//   Delta_hat = (s+1)/2 U_{s+1} - s/2 U_s,
// with the binomial ratios updated multiplicatively.
DeltaEstimate delta_hat_fast(const Sample& sample, int s);

// delta_hat_fast on an already sorted ascending span (replicate hot path).
double delta_hat_sorted(std::span<const double> sorted, int s);

// E[h1 | X_1 = x] under dist.
double g1_conditional(const Distribution& dist, int s, double x);

struct AsymptoticVariance {
  double sigma_sq = 0.0;  // Var g1(X)
  double total = 0.0;     // (s+1)^2 sigma_sq, limit variance of sqrt(n)(Delta_hat - Delta)
};

AsymptoticVariance asymptotic_variance(const Distribution& dist, int s);

}  // namespace wcre

#endif  // WCRE_USTAT_HPP_
