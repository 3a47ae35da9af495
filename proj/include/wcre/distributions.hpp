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

#ifndef WCRE_DISTRIBUTIONS_HPP_
#define WCRE_DISTRIBUTIONS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "wcre/random.hpp"
#include "wcre/sample.hpp"

namespace wcre {

enum class Family {
  kUniform,            // (a, b), 0 <= a < b
  kExponential,        // (rate)
  kPareto,             // (shape, x_min); survival (x_min / x)^shape on x >= x_min
  kLomax,              // (shape, scale); survival (scale / (scale + x))^shape
  kRayleigh,           // (sigma)
  kWeibull,            // (shape k, scale lambda); survival exp(-(x / lambda)^k)
  kLogNormal,          // (mu, sigma_log)
  kHalfNormal,         // (sigma)
  kLinearFailureRate,  // (a, b); hazard a + b x
};

struct Support {
  double lower = 0.0;
  double upper = 0.0;  // +infinity for unbounded families
};

// An immutable parametric lifetime law. Parameters are validated on
// construction; every member is a pure function of them.
class Distribution {
 public:
  static Distribution uniform(double a, double b);
  static Distribution exponential(double rate);
  static Distribution pareto(double shape, double x_min = 1.0);
  static Distribution lomax(double shape, double scale);
  static Distribution rayleigh(double sigma);
  static Distribution weibull(double shape, double scale);
  static Distribution lognormal(double mu, double sigma);
  static Distribution half_normal(double sigma);
  static Distribution linear_failure_rate(double a, double b);

  // Parses the token grammar `family:p1[,p2]` with lowercase family names:
  // uniform:a,b (uniform:b means a = 0), exponential:rate,
  // pareto:shape[,x_min], lomax:shape,scale, rayleigh:sigma,
  // weibull:shape,scale, lognormal:mu,sigma, halfnormal:sigma, lfr:a,b.
  // Throws InvalidArgument on anything else.
  static Distribution parse(std::string_view token);

  [[nodiscard]] Family family() const noexcept { return family_; }
  [[nodiscard]] double param1() const noexcept { return p1_; }
  [[nodiscard]] double param2() const noexcept { return p2_; }
  // Canonical token; parse(token()) reproduces *this exactly.
  [[nodiscard]] std::string token() const;
  [[nodiscard]] std::string name() const;

  [[nodiscard]] Support support() const noexcept;

  // Total on finite reals: 1 below the support, 0 above it.
  [[nodiscard]] double survival(double x) const noexcept;
  [[nodiscard]] double log_survival(double x) const noexcept;
  [[nodiscard]] double cdf(double x) const noexcept { return 1.0 - survival(x); }
  [[nodiscard]] double density(double x) const noexcept;
  [[nodiscard]] double log_density(double x) const noexcept;
  // Throws DomainError where survival(x) == 0.
  [[nodiscard]] double hazard(double x) const;

  // Inverse of the distribution function; u must lie in (0, 1).
  [[nodiscard]] double quantile(double u) const;
  // The x with survival(x) = u; u must lie in (0, 1).
  [[nodiscard]] double survival_quantile(double u) const;

  // One inverse-transform draw (LogNormal: exp of a normal variate).
  [[nodiscard]] double draw(Rng& rng) const noexcept;

  // A length scale of the bulk of the law (the median); used to place
  // quadrature breakpoints.
  [[nodiscard]] double scale_hint() const noexcept;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(Family family, double p1, double p2) noexcept
      : family_(family), p1_(p1), p2_(p2) {}

  Family family_;
  double p1_;
  double p2_;
};

// n iid draws; a pure function of (dist, n, seed).
Sample sample_iid(const Distribution& dist, std::size_t n, std::uint64_t seed);

// Second-moment estimate sqrt(sum x^2 / 2n) of the Rayleigh scale. Throws
// DataError for an all-zero sample.
double fit_rayleigh_moment(const Sample& sample);

}  // namespace wcre

#endif  // WCRE_DISTRIBUTIONS_HPP_
