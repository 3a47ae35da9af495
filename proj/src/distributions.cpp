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

#include "wcre/distributions.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>
#include <vector>

#include "wcre/error.hpp"
#include "wcre/numeric.hpp"

namespace wcre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = std::numbers::sqrt2;

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

// Standard normal upper-tail quantile: z with P(Z > z) = u.
double normal_upper_quantile(double u) {
  return kSqrt2 * boost::math::erfc_inv(2.0 * u);
}

struct FamilyInfo {
  Family family;
  std::string_view token;
  std::string_view name;
  int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::kUniform, "uniform", "Uniform", 2},
    {Family::kExponential, "exponential", "Exponential", 1},
    {Family::kPareto, "pareto", "Pareto", 2},
    {Family::kLomax, "lomax", "Lomax", 2},
    {Family::kRayleigh, "rayleigh", "Rayleigh", 1},
    {Family::kWeibull, "weibull", "Weibull", 2},
    {Family::kLogNormal, "lognormal", "LogNormal", 2},
    {Family::kHalfNormal, "halfnormal", "HalfNormal", 1},
    {Family::kLinearFailureRate, "lfr", "LinearFailureRate", 2},
};

const FamilyInfo& info(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f;
  }
  throw InvalidArgument("unknown family");
}

}  // namespace

Distribution Distribution::uniform(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b) && a >= 0.0 && a < b,
          "uniform: require 0 <= a < b");
  return {Family::kUniform, a, b};
}

Distribution Distribution::exponential(double rate) {
  require(positive(rate), "exponential: rate must be positive");
  return {Family::kExponential, rate, 0.0};
}

Distribution Distribution::pareto(double shape, double x_min) {
  require(positive(shape) && positive(x_min), "pareto: shape and x_min must be positive");
  return {Family::kPareto, shape, x_min};
}

Distribution Distribution::lomax(double shape, double scale) {
  require(positive(shape) && positive(scale), "lomax: shape and scale must be positive");
  return {Family::kLomax, shape, scale};
}

Distribution Distribution::rayleigh(double sigma) {
  require(positive(sigma), "rayleigh: sigma must be positive");
  return {Family::kRayleigh, sigma, 0.0};
}

Distribution Distribution::weibull(double shape, double scale) {
  require(positive(shape) && positive(scale), "weibull: shape and scale must be positive");
  return {Family::kWeibull, shape, scale};
}

Distribution Distribution::lognormal(double mu, double sigma) {
  require(std::isfinite(mu) && positive(sigma), "lognormal: require finite mu, sigma > 0");
  return {Family::kLogNormal, mu, sigma};
}

Distribution Distribution::half_normal(double sigma) {
  require(positive(sigma), "halfnormal: sigma must be positive");
  return {Family::kHalfNormal, sigma, 0.0};
}

Distribution Distribution::linear_failure_rate(double a, double b) {
  require(positive(a) && positive(b), "lfr: a and b must be positive");
  return {Family::kLinearFailureRate, a, b};
}

Distribution Distribution::parse(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument(fmt::format("distribution token '{}': expected family:p1[,p2]", token));
  }
  const std::string_view family = token.substr(0, colon);
  std::vector<double> params;
  std::string_view rest = token.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view field = rest.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InvalidArgument(
          fmt::format("distribution token '{}': '{}' is not a number", token, field));
    }
    params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  const FamilyInfo* match = nullptr;
  for (const auto& f : kFamilies) {
    if (f.token == family) match = &f;
  }
  if (match == nullptr) {
    throw InvalidArgument(fmt::format("distribution token '{}': unknown family '{}'", token, family));
  }
  const auto n = params.size();
  auto arity_error = [&] {
    return InvalidArgument(fmt::format("distribution token '{}': wrong number of parameters", token));
  };
  switch (match->family) {
    case Family::kUniform:
      if (n == 1) return uniform(0.0, params[0]);
      if (n == 2) return uniform(params[0], params[1]);
      throw arity_error();
    case Family::kPareto:
      if (n == 1) return pareto(params[0]);
      if (n == 2) return pareto(params[0], params[1]);
      throw arity_error();
    case Family::kExponential:
      if (n != 1) throw arity_error();
      return exponential(params[0]);
    case Family::kRayleigh:
      if (n != 1) throw arity_error();
      return rayleigh(params[0]);
    case Family::kHalfNormal:
      if (n != 1) throw arity_error();
      return half_normal(params[0]);
    case Family::kLomax:
      if (n != 2) throw arity_error();
      return lomax(params[0], params[1]);
    case Family::kWeibull:
      if (n != 2) throw arity_error();
      return weibull(params[0], params[1]);
    case Family::kLogNormal:
      if (n != 2) throw arity_error();
      return lognormal(params[0], params[1]);
    case Family::kLinearFailureRate:
      if (n != 2) throw arity_error();
      return linear_failure_rate(params[0], params[1]);
  }
  throw arity_error();
}

std::string Distribution::token() const {
  const auto& f = info(family_);
  if (f.arity == 1) return fmt::format("{}:{}", f.token, p1_);
  return fmt::format("{}:{},{}", f.token, p1_, p2_);
}

std::string Distribution::name() const {
  const auto& f = info(family_);
  if (f.arity == 1) return fmt::format("{}({})", f.name, p1_);
  return fmt::format("{}({},{})", f.name, p1_, p2_);
}

Support Distribution::support() const noexcept {
  switch (family_) {
    case Family::kUniform:
      return {p1_, p2_};
    case Family::kPareto:
      return {p2_, kInf};
    default:
      return {0.0, kInf};
  }
}

double Distribution::survival(double x) const noexcept {
  const auto sup = support();
  if (x <= sup.lower) return 1.0;
  if (x >= sup.upper) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return (p2_ - x) / (p2_ - p1_);
    case Family::kLogNormal:
      return 0.5 * std::erfc((std::log(x) - p1_) / (p2_ * kSqrt2));
    case Family::kHalfNormal:
      return std::erfc(x / (p1_ * kSqrt2));
    default:
      return std::exp(log_survival(x));
  }
}

double Distribution::log_survival(double x) const noexcept {
  const auto sup = support();
  if (x <= sup.lower) return 0.0;
  if (x >= sup.upper) return -kInf;
  switch (family_) {
    case Family::kUniform:
      return std::log((p2_ - x) / (p2_ - p1_));
    case Family::kExponential:
      return -p1_ * x;
    case Family::kPareto:
      return -p1_ * std::log(x / p2_);
    case Family::kLomax:
      return -p1_ * std::log1p(x / p2_);
    case Family::kRayleigh:
      return -0.5 * (x / p1_) * (x / p1_);
    case Family::kWeibull:
      return -std::pow(x / p2_, p1_);
    case Family::kLinearFailureRate:
      return -(p1_ * x + 0.5 * p2_ * x * x);
    case Family::kLogNormal:
    case Family::kHalfNormal:
      return std::log(survival(x));
  }
  return 0.0;
}

double Distribution::density(double x) const noexcept {
  const auto sup = support();
  if (x < sup.lower || x > sup.upper) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return 1.0 / (p2_ - p1_);
    case Family::kExponential:
      return p1_ * std::exp(-p1_ * x);
    case Family::kPareto:
      return p1_ / x * std::pow(p2_ / x, p1_);
    case Family::kLomax:
      return p1_ / (p2_ + x) * std::pow(p2_ / (p2_ + x), p1_);
    case Family::kRayleigh:
      return x / (p1_ * p1_) * std::exp(-0.5 * (x / p1_) * (x / p1_));
    case Family::kWeibull: {
      if (x == 0.0) {
        if (p1_ < 1.0) return kInf;
        return p1_ == 1.0 ? 1.0 / p2_ : 0.0;
      }
      const double z = x / p2_;
      return p1_ / p2_ * std::pow(z, p1_ - 1.0) * std::exp(-std::pow(z, p1_));
    }
    case Family::kLogNormal: {
      if (x == 0.0) return 0.0;
      const double z = (std::log(x) - p1_) / p2_;
      return std::exp(-0.5 * z * z) / (x * p2_ * std::sqrt(2.0 * std::numbers::pi));
    }
    case Family::kHalfNormal: {
      const double z = x / p1_;
      return std::sqrt(2.0 / std::numbers::pi) / p1_ * std::exp(-0.5 * z * z);
    }
    case Family::kLinearFailureRate:
      return (p1_ + p2_ * x) * std::exp(-(p1_ * x + 0.5 * p2_ * x * x));
  }
  return 0.0;
}

double Distribution::log_density(double x) const noexcept {
  const auto sup = support();
  if (x < sup.lower || x > sup.upper) return -kInf;
  switch (family_) {
    case Family::kUniform:
      return -std::log(p2_ - p1_);
    case Family::kExponential:
      return std::log(p1_) - p1_ * x;
    case Family::kPareto:
      return std::log(p1_ / x) + p1_ * std::log(p2_ / x);
    case Family::kLomax:
      return std::log(p1_ / (p2_ + x)) - p1_ * std::log1p(x / p2_);
    case Family::kRayleigh:
      return std::log(x / (p1_ * p1_)) - 0.5 * (x / p1_) * (x / p1_);
    case Family::kWeibull: {
      const double z = x / p2_;
      return std::log(p1_ / p2_) + (p1_ - 1.0) * std::log(z) - std::pow(z, p1_);
    }
    case Family::kLogNormal: {
      const double z = (std::log(x) - p1_) / p2_;
      return -0.5 * z * z - std::log(x * p2_) - 0.5 * std::log(2.0 * std::numbers::pi);
    }
    case Family::kHalfNormal: {
      const double z = x / p1_;
      return 0.5 * std::log(2.0 / std::numbers::pi) - std::log(p1_) - 0.5 * z * z;
    }
    case Family::kLinearFailureRate:
      return std::log(p1_ + p2_ * x) - (p1_ * x + 0.5 * p2_ * x * x);
  }
  return -kInf;
}

double Distribution::hazard(double x) const {
  const auto sup = support();
  if (x >= sup.upper) {
    throw DomainError(fmt::format("hazard: survival of {} is zero at x = {}", name(), x));
  }
  if (x < sup.lower) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return 1.0 / (p2_ - x);
    case Family::kExponential:
      return p1_;
    case Family::kPareto:
      return p1_ / x;
    case Family::kLomax:
      return p1_ / (p2_ + x);
    case Family::kRayleigh:
      return x / (p1_ * p1_);
    case Family::kLinearFailureRate:
      return p1_ + p2_ * x;
    default:
      break;
  }
  const double s = survival(x);
  if (s <= 0.0) {
    // Far tail: exp(log f - log S) stays finite where both underflow.
    return std::exp(log_density(x) - log_survival(x));
  }
  return density(x) / s;
}

double Distribution::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw InvalidArgument("quantile: u must lie in (0, 1)");
  // -log(1 - u), accurate for small u.
  const double cum_hazard = -std::log1p(-u);
  switch (family_) {
    case Family::kUniform:
      return p1_ + u * (p2_ - p1_);
    case Family::kExponential:
      return cum_hazard / p1_;
    case Family::kPareto:
      return p2_ * std::exp(cum_hazard / p1_);
    case Family::kLomax:
      return p2_ * std::expm1(cum_hazard / p1_);
    case Family::kRayleigh:
      return p1_ * std::sqrt(2.0 * cum_hazard);
    case Family::kWeibull:
      return p2_ * std::pow(cum_hazard, 1.0 / p1_);
    case Family::kLogNormal:
      return std::exp(p1_ - p2_ * normal_upper_quantile(u));
    case Family::kHalfNormal:
      return p1_ * kSqrt2 * boost::math::erf_inv(u);
    case Family::kLinearFailureRate:
      return 2.0 * cum_hazard / (p1_ + std::sqrt(p1_ * p1_ + 2.0 * p2_ * cum_hazard));
  }
  return 0.0;
}

double Distribution::survival_quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw InvalidArgument("survival_quantile: u must lie in (0, 1)");
  const double cum_hazard = -std::log(u);
  switch (family_) {
    case Family::kUniform:
      return p2_ - u * (p2_ - p1_);
    case Family::kExponential:
      return cum_hazard / p1_;
    case Family::kPareto:
      return p2_ * std::exp(cum_hazard / p1_);
    case Family::kLomax:
      return p2_ * std::expm1(cum_hazard / p1_);
    case Family::kRayleigh:
      return p1_ * std::sqrt(2.0 * cum_hazard);
    case Family::kWeibull:
      return p2_ * std::pow(cum_hazard, 1.0 / p1_);
    case Family::kLogNormal:
      return std::exp(p1_ + p2_ * normal_upper_quantile(u));
    case Family::kHalfNormal:
      return p1_ * kSqrt2 * boost::math::erfc_inv(u);
    case Family::kLinearFailureRate:
      return 2.0 * cum_hazard / (p1_ + std::sqrt(p1_ * p1_ + 2.0 * p2_ * cum_hazard));
  }
  return 0.0;
}

double Distribution::draw(Rng& rng) const noexcept {
  const double u = rng.uniform_open();
  if (family_ == Family::kLogNormal) {
    const double z = normal_upper_quantile(u);
    return std::exp(p1_ + p2_ * z);
  }
  return survival_quantile(u);
}

double Distribution::scale_hint() const noexcept { return survival_quantile(0.5); }

Sample sample_iid(const Distribution& dist, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_iid: n must be at least 1");
  Rng rng = make_stream(seed, StreamTag::kUser, n);
  std::vector<double> values(n);
  for (double& v : values) v = dist.draw(rng);
  return Sample(std::move(values));
}

double fit_rayleigh_moment(const Sample& sample) {
  CompensatedSum sum_sq;
  for (double x : sample.values()) sum_sq += x * x;
  const double total = sum_sq.value();
  if (!(total > 0.0)) throw DataError("fit_rayleigh_moment: sample has no positive value");
  return std::sqrt(total / (2.0 * static_cast<double>(sample.size())));
}

}  // namespace wcre
