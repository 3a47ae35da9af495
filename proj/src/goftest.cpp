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

#include "wcre/goftest.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include "wcre/error.hpp"
#include "wcre/numeric.hpp"
#include "wcre/parallel.hpp"
#include "wcre/random.hpp"
#include "wcre/ustat.hpp"

namespace wcre {
namespace {

constexpr std::size_t kMinCriticalReps = 1000;

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument(fmt::format("significance level alpha = {} must lie in (0, 1)", alpha));
  }
}

void require_reps(std::size_t reps, const char* what) {
  if (reps < kMinCriticalReps) {
    throw InvalidArgument(fmt::format("{}: reps = {} must be at least {}", what, reps, kMinCriticalReps));
  }
}

// Number of pool entries allowed strictly beyond the critical value.
std::size_t tail_allowance(double alpha, std::size_t reps) {
  const double target = alpha * static_cast<double>(reps);
  const double m = std::ceil(target - 1e-9) - 1.0;
  return m < 0.0 ? 0 : static_cast<std::size_t>(m);
}

double upper_critical(const std::vector<double>& pool, double alpha) {
  return pool[pool.size() - 1 - tail_allowance(alpha, pool.size())];
}

double lower_critical(const std::vector<double>& pool, double alpha) {
  return pool[tail_allowance(alpha, pool.size())];
}

double exceedance(const std::vector<double>& sorted_pool, double observed) {
  const auto above = sorted_pool.end() - std::upper_bound(sorted_pool.begin(), sorted_pool.end(), observed);
  return static_cast<double>(above) / static_cast<double>(sorted_pool.size());
}

Rng replicate_stream(std::uint64_t seed, StreamTag tag, std::size_t n, std::size_t r,
                     std::uint64_t extra = 0) {
  return Rng(derive_stream_key(
      seed, {static_cast<std::uint64_t>(tag), static_cast<std::uint64_t>(n),
             static_cast<std::uint64_t>(r), extra}));
}

void draw_sorted(const Distribution& dist, Rng& rng, std::vector<double>& out) {
  for (double& v : out) v = dist.draw(rng);
  std::sort(out.begin(), out.end());
}

double sigma_sq_hat(std::span<const double> x) {
  CompensatedSum sum;
  for (double v : x) sum += v * v;
  const double total = sum.value();
  if (!(total > 0.0)) throw DataError("sample has no positive value; Rayleigh scale cannot be fitted");
  return total / (2.0 * static_cast<double>(x.size()));
}

double statistic_of(GofStatistic test, std::span<const double> sorted, int s) {
  if (test == GofStatistic::kDelta) return standardized_sorted(sorted, s);
  return classical_statistic(sorted, test);
}

using PoolKey = std::tuple<int, std::size_t, int, std::size_t, std::uint64_t>;

struct PoolStore {
  std::mutex mutex;
  std::map<PoolKey, std::shared_ptr<const std::vector<double>>> pools;
};

PoolStore& pool_store() {
  static PoolStore store;
  return store;
}

// Sorted null statistics under Rayleigh(1).
std::shared_ptr<const std::vector<double>> null_pool(GofStatistic test, std::size_t n, int s,
                                                     std::size_t reps, std::uint64_t seed,
                                                     unsigned workers) {
  const PoolKey key{static_cast<int>(test), n, s, reps, seed};
  auto& store = pool_store();
  {
    std::lock_guard lock(store.mutex);
    if (auto it = store.pools.find(key); it != store.pools.end()) return it->second;
  }
  const auto null_law = Distribution::rayleigh(1.0);
  std::vector<double> pool(reps);
  parallel_for(reps, workers, [&](std::size_t r) {
    Rng rng = replicate_stream(seed, StreamTag::kNullCritical, n, r);
    std::vector<double> x(n);
    draw_sorted(null_law, rng, x);
    pool[r] = statistic_of(test, x, s);
  });
  std::sort(pool.begin(), pool.end());
  auto shared = std::make_shared<const std::vector<double>>(std::move(pool));
  std::lock_guard lock(store.mutex);
  return store.pools.emplace(key, std::move(shared)).first->second;
}

using CriticalKey = std::tuple<std::size_t, int, double, std::size_t, std::uint64_t>;

struct CriticalCache {
  std::mutex mutex;
  std::map<CriticalKey, double> values;
  std::string path;
};

CriticalCache& critical_cache() {
  static CriticalCache cache;
  return cache;
}

}  // namespace

std::string_view to_string(GofMethod m) noexcept {
  switch (m) {
    case GofMethod::kMonteCarlo:
      return "monte_carlo";
    case GofMethod::kAsymptotic:
      return "asymptotic";
    case GofMethod::kBootstrap:
      return "bootstrap";
  }
  return "unknown";
}

std::string_view to_string(GofStatistic t) noexcept {
  switch (t) {
    case GofStatistic::kDelta:
      return "delta";
    case GofStatistic::kKolmogorovSmirnov:
      return "ks";
    case GofStatistic::kCramerVonMises:
      return "cvm";
    case GofStatistic::kAndersonDarling:
      return "ad";
  }
  return "unknown";
}

std::string_view to_string(Tail t) noexcept {
  switch (t) {
    case Tail::kUpper:
      return "upper";
    case Tail::kLower:
      return "lower";
    case Tail::kTwoSided:
      return "two-sided";
  }
  return "unknown";
}

GofStatistic parse_statistic(std::string_view name) {
  for (auto t : {GofStatistic::kDelta, GofStatistic::kKolmogorovSmirnov,
                 GofStatistic::kCramerVonMises, GofStatistic::kAndersonDarling}) {
    if (to_string(t) == name) return t;
  }
  throw InvalidArgument(fmt::format("unknown test statistic '{}' (delta|ks|cvm|ad)", name));
}

Tail parse_tail(std::string_view name) {
  for (auto t : {Tail::kUpper, Tail::kLower, Tail::kTwoSided}) {
    if (to_string(t) == name) return t;
  }
  throw InvalidArgument(fmt::format("unknown tail '{}' (upper|lower|two-sided)", name));
}

double standardized_sorted(std::span<const double> sorted, int s) {
  return delta_hat_sorted(sorted, s) / sigma_sq_hat(sorted);
}

double standardized_statistic(const Sample& sample, int s) {
  return standardized_sorted(sample.values(), s);
}

std::vector<double> mc_null_pool(std::size_t n, int s, std::size_t reps, std::uint64_t seed,
                                 unsigned workers) {
  if (n < static_cast<std::size_t>(s) + 1) throw InvalidArgument("mc_null_pool: need n >= s + 1");
  return *null_pool(GofStatistic::kDelta, n, s, reps, seed, workers);
}

void set_critical_value_cache_file(const std::string& path) {
  auto& cache = critical_cache();
  std::lock_guard lock(cache.mutex);
  cache.path = path;
  if (path.empty()) return;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::size_t n = 0;
    int s = 0;
    double alpha = 0.0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    char c1, c2, c3, c4, c5;
    if (fields >> n >> c1 >> s >> c2 >> alpha >> c3 >> reps >> c4 >> seed >> c5 >> value) {
      cache.values[{n, s, alpha, reps, seed}] = value;
    }
  }
}

double mc_critical_value(std::size_t n, int s, double alpha, std::size_t reps,
                         std::uint64_t seed, unsigned workers) {
  require_alpha(alpha);
  require_reps(reps, "mc_critical_value");
  const CriticalKey key{n, s, alpha, reps, seed};
  auto& cache = critical_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  const auto pool = null_pool(GofStatistic::kDelta, n, s, reps, seed, workers);
  const double value = upper_critical(*pool, alpha);
  std::lock_guard lock(cache.mutex);
  if (cache.values.emplace(key, value).second && !cache.path.empty()) {
    std::ofstream out(cache.path, std::ios::app);
    out << fmt::format("{},{},{},{},{},{}\n", n, s, alpha, reps, seed, value);
  }
  return value;
}

GofResult run_test_mc(const Sample& sample, int s, double alpha, std::size_t reps,
                      std::uint64_t seed, unsigned workers) {
  require_alpha(alpha);
  require_reps(reps, "run_test_mc");
  GofResult r;
  r.method = GofMethod::kMonteCarlo;
  r.n = sample.size();
  r.s = s;
  r.alpha = alpha;
  r.reps = reps;
  r.seed = seed;
  r.statistic = delta_hat_fast(sample, s).value;
  r.standardized = standardized_statistic(sample, s);
  r.critical_value = mc_critical_value(r.n, s, alpha, reps, seed, workers);
  r.p_value = exceedance(*null_pool(GofStatistic::kDelta, r.n, s, reps, seed, workers), *r.standardized);
  r.reject = *r.standardized > *r.critical_value;
  return r;
}

double normal_upper_quantile(double alpha) {
  require_alpha(alpha);
  return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * alpha);
}

double null_asymptotic_variance(int s) {
  static std::mutex mutex;
  static std::map<int, double> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  const double v = asymptotic_variance(Distribution::rayleigh(1.0), s).total;
  memo.emplace(s, v);
  return v;
}

GofResult run_test_asymptotic(const Sample& sample, int s, double alpha) {
  require_alpha(alpha);
  GofResult r;
  r.method = GofMethod::kAsymptotic;
  r.n = sample.size();
  r.s = s;
  r.alpha = alpha;
  r.statistic = delta_hat_fast(sample, s).value;
  r.standardized = standardized_statistic(sample, s);
  const double sigma0 = std::sqrt(null_asymptotic_variance(s));
  const double root_n = std::sqrt(static_cast<double>(r.n));
  const double z = root_n * *r.standardized / sigma0;
  const double z_alpha = normal_upper_quantile(alpha);
  r.critical_value = z_alpha * sigma0 / root_n;
  r.p_value = 0.5 * std::erfc(z / std::numbers::sqrt2);
  r.reject = z > z_alpha;
  return r;
}

GofResult bootstrap_pvalue(const Sample& sample, int s, std::size_t reps, std::uint64_t seed,
                           double alpha, unsigned workers) {
  require_alpha(alpha);
  require_reps(reps, "bootstrap_pvalue");
  GofResult r;
  r.method = GofMethod::kBootstrap;
  r.n = sample.size();
  r.s = s;
  r.alpha = alpha;
  r.reps = reps;
  r.seed = seed;
  r.statistic = delta_hat_fast(sample, s).value;
  r.standardized = standardized_statistic(sample, s);
  const auto fitted = Distribution::rayleigh(fit_rayleigh_moment(sample));
  std::vector<double> pool(reps);
  parallel_for(reps, workers, [&](std::size_t b) {
    Rng rng = replicate_stream(seed, StreamTag::kBootstrap, r.n, b);
    std::vector<double> x(r.n);
    draw_sorted(fitted, rng, x);
    pool[b] = delta_hat_sorted(x, s);
  });
  std::sort(pool.begin(), pool.end());
  r.critical_value = upper_critical(pool, alpha);
  r.p_value = exceedance(pool, r.statistic);
  r.reject = *r.p_value < alpha;
  return r;
}

double ks_statistic(std::span<const double> u) {
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double k = static_cast<double>(i);
    d = std::max({d, (k + 1.0) / n - u[i], u[i] - k / n});
  }
  return d;
}

double cvm_statistic(std::span<const double> u) {
  const double n = static_cast<double>(u.size());
  CompensatedSum sum;
  sum += 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    sum += d * d;
  }
  return sum.value();
}

double ad_statistic(std::span<const double> u) {
  const std::size_t n = u.size();
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = 2.0 * static_cast<double>(i) + 1.0;
    sum += weight * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
  }
  return -static_cast<double>(n) - sum.value() / static_cast<double>(n);
}

double classical_statistic(std::span<const double> sorted, GofStatistic test) {
  const double two_sigma_sq = 2.0 * sigma_sq_hat(sorted);
  const std::size_t n = sorted.size();
  if (test == GofStatistic::kAndersonDarling) {
    // log F and log(1 - F) straight from the exponent, no cancellation.
    CompensatedSum sum;
    for (std::size_t i = 0; i < n; ++i) {
      const double weight = 2.0 * static_cast<double>(i) + 1.0;
      const double lo = sorted[i] * sorted[i] / two_sigma_sq;
      const double hi = sorted[n - 1 - i] * sorted[n - 1 - i] / two_sigma_sq;
      sum += weight * (std::log(-std::expm1(-lo)) - hi);
    }
    return -static_cast<double>(n) - sum.value() / static_cast<double>(n);
  }
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = -std::expm1(-sorted[i] * sorted[i] / two_sigma_sq);
  switch (test) {
    case GofStatistic::kKolmogorovSmirnov:
      return ks_statistic(u);
    case GofStatistic::kCramerVonMises:
      return cvm_statistic(u);
    default:
      break;
  }
  throw InvalidArgument("classical_statistic: not an EDF statistic");
}

GofResult classical_gof(const Sample& sample, GofStatistic test, std::size_t reps,
                        std::uint64_t seed, double alpha, unsigned workers) {
  if (test == GofStatistic::kDelta) throw InvalidArgument("classical_gof: use run_test_mc for delta");
  require_alpha(alpha);
  require_reps(reps, "classical_gof");
  GofResult r;
  r.test = test;
  r.method = GofMethod::kBootstrap;
  r.n = sample.size();
  r.alpha = alpha;
  r.reps = reps;
  r.seed = seed;
  r.statistic = classical_statistic(sample.values(), test);
  const auto fitted = Distribution::rayleigh(fit_rayleigh_moment(sample));
  std::vector<double> pool(reps);
  parallel_for(reps, workers, [&](std::size_t b) {
    Rng rng = replicate_stream(seed, StreamTag::kClassicalBootstrap, r.n, b,
                               static_cast<std::uint64_t>(test));
    std::vector<double> x(r.n);
    draw_sorted(fitted, rng, x);
    pool[b] = classical_statistic(x, test);
  });
  std::sort(pool.begin(), pool.end());
  r.critical_value = upper_critical(pool, alpha);
  r.p_value = exceedance(pool, r.statistic);
  r.reject = *r.p_value < alpha;
  return r;
}

StudyTable power_study(const StudyConfig& config) {
  require_alpha(config.alpha);
  require_reps(config.critical_value_reps, "power_study");
  if (config.outer_reps == 0) throw InvalidArgument("power_study: outer_reps must be positive");
  if (config.sample_sizes.empty()) throw InvalidArgument("power_study: empty sample-size grid");
  if (config.s < 1) throw InvalidArgument("power_study: s must be a positive integer");
  for (std::size_t n : config.sample_sizes) {
    if (n < static_cast<std::size_t>(config.s) + 1) {
      throw InvalidArgument(fmt::format("power_study: n = {} is below s + 1", n));
    }
  }
  StudyTable table;
  table.alternative = config.alternative.token();
  table.alpha = config.alpha;
  table.reps = config.outer_reps;
  table.seed = config.seed;
  for (std::size_t n : config.sample_sizes) {
    double upper = std::numeric_limits<double>::infinity();
    double lower = -std::numeric_limits<double>::infinity();
    if (config.test == GofStatistic::kDelta && config.tail == Tail::kUpper) {
      upper = mc_critical_value(n, config.s, config.alpha, config.critical_value_reps,
                                config.seed, config.workers);
    } else {
      const auto pool = null_pool(config.test, n, config.s, config.critical_value_reps,
                                  config.seed, config.workers);
      const double level = config.tail == Tail::kTwoSided ? 0.5 * config.alpha : config.alpha;
      if (config.tail != Tail::kLower) upper = upper_critical(*pool, level);
      if (config.tail != Tail::kUpper) lower = lower_critical(*pool, level);
    }
    std::vector<unsigned char> rejected(config.outer_reps, 0);
    parallel_for(config.outer_reps, config.workers, [&](std::size_t r) {
      Rng rng = replicate_stream(config.seed, StreamTag::kAlternative, n, r);
      std::vector<double> x(n);
      draw_sorted(config.alternative, rng, x);
      const double t = statistic_of(config.test, x, config.s);
      rejected[r] = (t > upper || t < lower) ? 1 : 0;
    });
    const auto count = std::count(rejected.begin(), rejected.end(), 1);
    const double reps = static_cast<double>(config.outer_reps);
    const double rate = static_cast<double>(count) / reps;
    table.rows.push_back({n, rate, std::sqrt(rate * (1.0 - rate) / reps)});
  }
  return table;
}

StudyTable size_study(const StudyConfig& config) {
  StudyConfig null_config = config;
  if (config.alternative.family() != Family::kRayleigh) {
    null_config.alternative = Distribution::rayleigh(1.0);
  }
  return power_study(null_config);
}

std::string to_csv(const StudyTable& table) {
  std::string out = "alternative,n,alpha,reps,rejection_rate,std_error,seed\n";
  std::string alternative = table.alternative;
  if (alternative.find(',') != std::string::npos) alternative = fmt::format("\"{}\"", alternative);
  for (const auto& row : table.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", alternative, row.n, table.alpha,
                       table.reps, row.rejection_rate, row.std_error, table.seed);
  }
  return out;
}

}  // namespace wcre
