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

#ifndef WCRE_GOFTEST_HPP_
#define WCRE_GOFTEST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcre/distributions.hpp"
#include "wcre/sample.hpp"

namespace wcre {

// Goodness-of-fit testing of H0: the sample is Rayleigh with unknown scale.
//
// The test statistic is the standardized departure estimate
// Delta_hat / sigma_hat^2, sigma_hat^2 = sum x^2 / 2n. Both numerator and
// denominator are homogeneous of degree 2, so its null law is free of the
// unknown scale; critical values simulated under Rayleigh(1) apply to every
// Rayleigh law. H0 is rejected for large values.

enum class GofMethod { kMonteCarlo, kAsymptotic, kBootstrap };
enum class GofStatistic { kDelta, kKolmogorovSmirnov, kCramerVonMises, kAndersonDarling };
enum class Tail { kUpper, kLower, kTwoSided };

std::string_view to_string(GofMethod m) noexcept;
std::string_view to_string(GofStatistic t) noexcept;
std::string_view to_string(Tail t) noexcept;
GofStatistic parse_statistic(std::string_view name);
Tail parse_tail(std::string_view name);

struct GofResult {
  GofStatistic test = GofStatistic::kDelta;
  GofMethod method = GofMethod::kMonteCarlo;
  double statistic = 0.0;  // Delta_hat, or the EDF statistic for classical tests
  std::optional<double> standardized;  // Delta_hat / sigma_hat^2 (delta tests only)
  std::optional<double> critical_value;
  std::optional<double> p_value;
  bool reject = false;
  std::size_t n = 0;
  int s = 1;
  double alpha = 0.05;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

double standardized_statistic(const Sample& sample, int s);
// Same on a sorted ascending span.
double standardized_sorted(std::span<const double> sorted, int s);

// Sorted null pool of standardized statistics from reps Rayleigh(1) samples
// of size n. Replicate r uses its own stream keyed by (seed, n, r).
// Memoised per process.
std::vector<double> mc_null_pool(std::size_t n, int s, std::size_t reps, std::uint64_t seed,
                                 unsigned workers = 0);

// Upper critical value c with #{pool > c} < alpha * reps: the order
// statistic of rank reps - ceil(alpha * reps) + 1 (one-based). Requires
// reps >= 1000 and 0 < alpha < 1. The value is memoised per process and,
// when a cache file is configured, persisted there keyed by
// (n, s, alpha, reps, seed).
double mc_critical_value(std::size_t n, int s, double alpha, std::size_t reps,
                         std::uint64_t seed, unsigned workers = 0);

// Persist critical values to path (CSV n,s,alpha,reps,seed,value). Existing
// entries are loaded. An empty path disables persistence.
void set_critical_value_cache_file(const std::string& path);

// Monte Carlo test; p_value = #{pool > standardized} / reps.
GofResult run_test_mc(const Sample& sample, int s, double alpha, std::size_t reps,
                      std::uint64_t seed, unsigned workers = 0);

// Normal approximation: reject iff sqrt(n) standardized / sigma_0 > z_alpha,
// sigma_0^2 the asymptotic null variance of Rayleigh(1). critical_value is
// reported on the standardized scale, z_alpha sigma_0 / sqrt(n).
GofResult run_test_asymptotic(const Sample& sample, int s, double alpha);

// Asymptotic null variance (s+1)^2 Var g1 under Rayleigh(1); memoised.
double null_asymptotic_variance(int s);

// Upper-alpha point of the standard normal law.
double normal_upper_quantile(double alpha);

// Parametric bootstrap from Rayleigh(sigma_hat) with the raw Delta_hat;
// p_value = #{bootstrap Delta_hat > observed} / reps (strict), reject iff
// p_value < alpha.
GofResult bootstrap_pvalue(const Sample& sample, int s, std::size_t reps, std::uint64_t seed,
                           double alpha = 0.05, unsigned workers = 0);

// EDF statistics of probability-integral-transformed values u (sorted).
double ks_statistic(std::span<const double> sorted_u);
double cvm_statistic(std::span<const double> sorted_u);
double ad_statistic(std::span<const double> sorted_u);

// EDF statistic against the moment-fitted Rayleigh law.
double classical_statistic(std::span<const double> sorted, GofStatistic test);

// Classical test with a parametric-bootstrap p-value (refitting sigma on
// every bootstrap sample).
GofResult classical_gof(const Sample& sample, GofStatistic test, std::size_t reps,
                        std::uint64_t seed, double alpha = 0.05, unsigned workers = 0);

struct StudyConfig {
  Distribution alternative = Distribution::rayleigh(1.0);
  std::vector<std::size_t> sample_sizes{10, 20, 30, 40, 50};
  double alpha = 0.05;
  int s = 1;
  std::size_t outer_reps = 2000;
  std::size_t critical_value_reps = 2000;
  std::uint64_t seed = 1;
  GofStatistic test = GofStatistic::kDelta;
  Tail tail = Tail::kUpper;
  unsigned workers = 0;
};

struct StudyRow {
  std::size_t n = 0;
  double rejection_rate = 0.0;
  double std_error = 0.0;
};

struct StudyTable {
  std::string alternative;  // distribution token
  double alpha = 0.05;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<StudyRow> rows;
};

// For each n: null critical value(s) from critical_value_reps Rayleigh(1)
// samples, then outer_reps draws from the alternative; rejection_rate is
// the fraction in the rejection region. Independent of workers.
StudyTable power_study(const StudyConfig& config);
// power_study with the alternative replaced by Rayleigh(1) unless it
// already is a Rayleigh law.
StudyTable size_study(const StudyConfig& config);

// CSV with header alternative,n,alpha,reps,rejection_rate,std_error,seed.
std::string to_csv(const StudyTable& table);

}  // namespace wcre

#endif  // WCRE_GOFTEST_HPP_
