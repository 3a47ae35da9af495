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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "wcre/error.hpp"
#include "wcre/quadrature.hpp"

namespace wcre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Distribution> catalogue() {
  return {Distribution::uniform(0.0, 2.0),     Distribution::uniform(2.0, 4.0),
          Distribution::exponential(1.5),      Distribution::pareto(3.0, 1.0),
          Distribution::pareto(2.0, 2.0),      Distribution::lomax(5.0, 1.0),
          Distribution::rayleigh(1.0),         Distribution::rayleigh(2.5),
          Distribution::weibull(1.5, 2.0),     Distribution::lognormal(1.0, 1.0),
          Distribution::lognormal(-0.5, 0.3),  Distribution::half_normal(0.5),
          Distribution::linear_failure_rate(0.5, 2.0)};
}

class CatalogueTest : public ::testing::TestWithParam<Distribution> {};

TEST_P(CatalogueTest, DensityIntegratesToOne) {
  const auto& d = GetParam();
  const auto sup = d.support();
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  opts.tail_scale = d.scale_hint();
  const double breaks[] = {sup.lower + d.scale_hint()};
  const auto r = integrate([&](double x) { return d.density(x); }, sup.lower, sup.upper, opts,
                           std::isfinite(sup.upper) ? std::span<const double>{} : std::span<const double>(breaks));
  EXPECT_NEAR(r.value, 1.0, 1e-6) << d.name();
}

TEST_P(CatalogueTest, SurvivalIsMonotoneFromOneToZero) {
  const auto& d = GetParam();
  const auto sup = d.support();
  EXPECT_EQ(d.survival(sup.lower), 1.0);
  EXPECT_EQ(d.survival(sup.lower - 1.0), 1.0);
  double previous = 1.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = d.quantile(std::min(0.999999, 1e-6 + i / 400.0));
    const double s = d.survival(x);
    EXPECT_LE(s, previous + 1e-15);
    previous = s;
  }
  EXPECT_LT(d.survival(d.quantile(1.0 - 1e-12)), 1e-10);
}

TEST_P(CatalogueTest, QuantileRoundTrip) {
  const auto& d = GetParam();
  for (double u : {1e-9, 1e-4, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.9999}) {
    EXPECT_NEAR(d.survival(d.quantile(1.0 - u)), u, 1e-10) << d.name() << " u=" << u;
    EXPECT_NEAR(d.survival(d.survival_quantile(u)), u, 1e-10 * std::max(1.0, u)) << d.name();
  }
}

TEST_P(CatalogueTest, HazardIsDensityOverSurvival) {
  const auto& d = GetParam();
  for (double u : {0.05, 0.3, 0.5, 0.8, 0.95}) {
    const double x = d.quantile(u);
    EXPECT_NEAR(d.hazard(x), d.density(x) / d.survival(x), 1e-10 * std::max(1.0, d.hazard(x)));
    EXPECT_NEAR(d.log_density(x), std::log(d.density(x)), 1e-10);
    EXPECT_NEAR(d.log_survival(x), std::log(d.survival(x)), 1e-12);
  }
}

TEST_P(CatalogueTest, DensityIsMinusSurvivalDerivative) {
  const auto& d = GetParam();
  for (double u : {0.2, 0.5, 0.8}) {
    const double x = d.quantile(u);
    const double h = 1e-6 * std::max(1.0, x);
    const double numeric = (d.survival(x - h) - d.survival(x + h)) / (2.0 * h);
    EXPECT_NEAR(numeric, d.density(x), 1e-6 * std::max(1.0, d.density(x)));
  }
}

TEST_P(CatalogueTest, SamplerMatchesCdf) {
  const auto& d = GetParam();
  constexpr std::size_t kN = 100000;
  const Sample x = sample_iid(d, kN, 2024);
  double ks = 0.0;
  for (std::size_t i = 0; i < kN; ++i) {
    const double f = d.cdf(x[i]);
    ks = std::max({ks, (i + 1.0) / kN - f, f - static_cast<double>(i) / kN});
  }
  EXPECT_LT(ks, 0.02) << d.name();
}

TEST_P(CatalogueTest, TokenRoundTrip) {
  const auto& d = GetParam();
  EXPECT_EQ(Distribution::parse(d.token()), d);
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, CatalogueTest, ::testing::ValuesIn(catalogue()));

TEST(Distributions, SurvivalExamples) {
  EXPECT_EQ(Distribution::rayleigh(1.0).survival(0.0), 1.0);
  EXPECT_NEAR(Distribution::pareto(2.0).survival(2.0), 0.25, 1e-15);
  EXPECT_NEAR(Distribution::exponential(1.0).survival(std::log(2.0)), 0.5, 1e-15);
  EXPECT_EQ(Distribution::uniform(0.0, 2.0).survival(3.0), 0.0);
}

TEST(Distributions, HazardExamples) {
  const auto e = Distribution::exponential(2.0);
  for (double x : {0.0, 0.3, 4.0, 25.0}) EXPECT_NEAR(e.hazard(x), 2.0, 1e-12);
  const auto r = Distribution::rayleigh(1.7);
  for (double x : {0.1, 1.0, 3.0}) EXPECT_NEAR(r.hazard(x), x / (1.7 * 1.7), 1e-12);
  EXPECT_NEAR(Distribution::uniform(0.0, 2.0).density(1.0), 0.5, 1e-15);
  EXPECT_NEAR(Distribution::linear_failure_rate(0.5, 2.0).hazard(1.5), 3.5, 1e-12);
}

TEST(Distributions, HazardBeyondSupportIsDomainError) {
  EXPECT_THROW((void)Distribution::uniform(0.0, 1.0).hazard(1.0), DomainError);
  EXPECT_THROW((void)Distribution::uniform(0.0, 1.0).hazard(2.0), DomainError);
}

TEST(Distributions, RayleighMedian) {
  EXPECT_NEAR(Distribution::rayleigh(1.0).quantile(0.5), std::sqrt(-2.0 * std::log(0.5)), 1e-15);
  EXPECT_NEAR(Distribution::rayleigh(1.0).quantile(0.5), 1.17741002251547, 1e-13);
}

TEST(Distributions, QuantileRejectsOutsideUnitInterval) {
  const auto r = Distribution::rayleigh(1.0);
  for (double u : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    EXPECT_THROW((void)r.quantile(u), InvalidArgument);
    EXPECT_THROW((void)r.survival_quantile(u), InvalidArgument);
  }
}

TEST(Distributions, ParameterValidation) {
  EXPECT_THROW(Distribution::uniform(2.0, 1.0), InvalidArgument);
  EXPECT_THROW(Distribution::uniform(-1.0, 1.0), InvalidArgument);
  EXPECT_THROW(Distribution::exponential(0.0), InvalidArgument);
  EXPECT_THROW(Distribution::pareto(-1.0), InvalidArgument);
  EXPECT_THROW(Distribution::lomax(1.0, 0.0), InvalidArgument);
  EXPECT_THROW(Distribution::rayleigh(kInf), InvalidArgument);
  EXPECT_THROW(Distribution::lognormal(0.0, 0.0), InvalidArgument);
  EXPECT_THROW(Distribution::linear_failure_rate(0.0, 1.0), InvalidArgument);
  EXPECT_NO_THROW(Distribution::lognormal(-3.0, 1.0));
}

TEST(Distributions, TokenGrammar) {
  EXPECT_EQ(Distribution::parse("rayleigh:1.0"), Distribution::rayleigh(1.0));
  EXPECT_EQ(Distribution::parse("lomax:5,1"), Distribution::lomax(5.0, 1.0));
  EXPECT_EQ(Distribution::parse("uniform:2"), Distribution::uniform(0.0, 2.0));
  EXPECT_EQ(Distribution::parse("pareto:2"), Distribution::pareto(2.0, 1.0));
  EXPECT_EQ(Distribution::parse("pareto:2,2"), Distribution::pareto(2.0, 2.0));
  EXPECT_EQ(Distribution::parse("halfnormal:0.5"), Distribution::half_normal(0.5));
  EXPECT_EQ(Distribution::parse("lfr:0.5,1"), Distribution::linear_failure_rate(0.5, 1.0));
  for (const char* bad : {"", "rayleigh", "Rayleigh:1", "gamma:2", "rayleigh:x", "rayleigh:1,2",
                          "lomax:5", "rayleigh:-1", "exponential:1,", "weibull:1,2,3"}) {
    EXPECT_THROW(Distribution::parse(bad), InvalidArgument) << bad;
  }
}

TEST(Distributions, SamplingIsDeterministic) {
  const auto d = Distribution::lognormal(1.0, 1.0);
  const Sample a = sample_iid(d, 50, 11);
  const Sample b = sample_iid(d, 50, 11);
  const Sample c = sample_iid(d, 50, 12);
  EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  EXPECT_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
}

TEST(Distributions, ExponentialLawOfLargeNumbers) {
  const Sample x = sample_iid(Distribution::exponential(1.0), 100000, 5);
  double sum = 0.0;
  for (double v : x.values()) sum += v;
  EXPECT_NEAR(sum / x.size(), 1.0, 0.02);
}

TEST(Sample, SortsAndValidates) {
  const Sample s({3.0, 1.0, 2.0});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.min(), 1.0);
  EXPECT_EQ(s.max(), 3.0);
  EXPECT_EQ(s[1], 2.0);
  EXPECT_THROW(Sample({}), DataError);
  EXPECT_THROW(Sample({1.0, -0.5}), DataError);
  EXPECT_THROW(Sample({1.0, kInf}), DataError);
  EXPECT_NO_THROW(Sample({0.0, 0.0}));
}

TEST(FitRayleigh, Examples) {
  EXPECT_NEAR(fit_rayleigh_moment(Sample({1, 1, 1, 1})), std::sqrt(0.5), 1e-15);
  for (double c : {0.01, 3.0, 1e5}) {
    EXPECT_NEAR(fit_rayleigh_moment(Sample({c, c, c})), c / std::numbers::sqrt2, 1e-15 * c);
  }
  EXPECT_THROW(fit_rayleigh_moment(Sample({0.0, 0.0})), DataError);
}

TEST(FitRayleigh, BallBearingsGolden) {
  const Sample x({17.88, 28.92, 33.00, 41.52, 42.12, 45.60, 48.48, 51.84, 51.96, 54.12, 55.56, 67.80,
                  67.80, 67.80, 68.88, 84.12, 93.12, 98.64, 105.12, 105.84, 127.92, 128.04, 173.40});
  EXPECT_NEAR(fit_rayleigh_moment(x), 57.2306226937383888, 1e-12);
}

TEST(FitRayleigh, ScaleEquivariant) {
  const Sample x = sample_iid(Distribution::rayleigh(2.0), 40, 8);
  for (double a : {0.5, 2.0, 8.0}) {
    EXPECT_DOUBLE_EQ(fit_rayleigh_moment(x.scaled(a)), a * fit_rayleigh_moment(x));
  }
}

}  // namespace
}  // namespace wcre
