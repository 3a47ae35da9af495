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

#include "wcre/characterization.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "wcre/egf.hpp"
#include "wcre/error.hpp"

namespace wcre {
namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

double sup_error(const Distribution& d, const CurveOnGrid& curve) {
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    worst = std::max(worst, std::abs(curve.values()[i] - d.survival(curve.grid()[i])));
  }
  return worst;
}

TEST(HazardFromDwcregf, ExponentialCurve) {
  const double lambda = 2.0;
  const double s = 1.0;
  const AgeCurve c = [=](double t) { return (1.0 + lambda * s * t) / (s * lambda * s * lambda); };
  EXPECT_NEAR(hazard_from_dwcregf(c, s, 3.0), 2.0, 1e-8);
  EXPECT_NEAR(hazard_from_dwcregf(c, s, 0.0), 2.0, 1e-8);
}

TEST(HazardFromDwcregf, ConstantCurveGivesLinearHazard) {
  const AgeCurve c = [](double) { return 1.0; };
  EXPECT_NEAR(hazard_from_dwcregf(c, 1.0, 1.5), 1.5, 1e-12);
  EXPECT_NEAR(hazard_from_dwcregf(c, 2.0, 1.5), 0.75, 1e-12);
  EXPECT_EQ(hazard_from_dwcregf(c, 1.0, 0.0), 0.0);
}

TEST(HazardFromDwcregf, UniformCurveMatchesModelHazard) {
  const auto d = Distribution::uniform(0.0, 1.0);
  EXPECT_NEAR(hazard_from_dwcregf(dwcregf_curve(d, 1.0), 1.0, 0.25), 4.0 / 3.0, 1e-5);
  EXPECT_NEAR(hazard_from_dwcregf(dwcregf_curve(d, 1.0), 1.0, 0.25), d.hazard(0.25), 1e-5);
}

TEST(HazardFromDwcregf, MatchesCatalogueHazards) {
  for (const auto& d : {Distribution::exponential(1.3), Distribution::rayleigh(0.8), Distribution::pareto(4.0, 1.0),
                        Distribution::lomax(5.0, 2.0), Distribution::weibull(1.7, 1.0),
                        Distribution::half_normal(1.0)}) {
    for (double s : {1.0, 2.0}) {
      for (double u : {0.1, 0.5, 0.9}) {
        const double t = d.quantile(u);
        EXPECT_NEAR(hazard_from_dwcregf(dwcregf_curve(d, s), s, t), d.hazard(t), 1e-5 * std::max(1.0, d.hazard(t)))
            << d.name() << " s=" << s << " t=" << t;
      }
    }
  }
}

TEST(HazardFromDwcregf, Errors) {
  const AgeCurve zero = [](double) { return 0.0; };
  EXPECT_THROW(hazard_from_dwcregf(zero, 1.0, 1.0), InvalidArgument);
  const AgeCurve negative = [](double) { return -1.0; };
  EXPECT_THROW(hazard_from_dwcregf(negative, 1.0, 1.0), InvalidArgument);
  // C' = -2t makes t + C' negative: no lifetime law has this curve.
  const AgeCurve steep = [](double t) { return 10.0 - t * t; };
  EXPECT_THROW(hazard_from_dwcregf(steep, 1.0, 1.0), NumericalError);
  EXPECT_THROW(hazard_from_dwcregf(zero, 0.0, 1.0), InvalidArgument);
}

TEST(ReconstructSurvival, Rayleigh) {
  const auto d = Distribution::rayleigh(1.0);
  const auto curve = reconstruct_survival(dwcregf_curve(d, 1.0), 1.0, linspace(0.0, 3.0, 61));
  EXPECT_LT(sup_error(d, curve), 1e-4);
  EXPECT_EQ(curve.values()[0], 1.0);
}

TEST(ReconstructSurvival, Exponential) {
  const auto d = Distribution::exponential(1.0);
  const auto curve = reconstruct_survival(dwcregf_curve(d, 2.0), 2.0, linspace(0.0, 4.0, 81));
  EXPECT_LT(sup_error(d, curve), 1e-4);
}

TEST(ReconstructSurvival, ConstantCurveIsRayleigh) {
  const double k = 1.7;
  for (double s : {0.5, 1.0, 3.0}) {
    const AgeCurve c = [k](double) { return k; };
    const auto curve = reconstruct_survival(c, s, linspace(0.0, 5.0, 51));
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double x = curve.grid()[i];
      EXPECT_NEAR(curve.values()[i], std::exp(-x * x / (2.0 * s * k)), 1e-9);
    }
  }
}

TEST(ReconstructSurvival, RoundTripAcrossClosedFormFamilies) {
  for (const auto& d : {Distribution::exponential(1.0), Distribution::exponential(3.0), Distribution::uniform(0.0, 1.0),
                        Distribution::uniform(2.0, 4.0), Distribution::rayleigh(2.0), Distribution::pareto(3.0, 1.0),
                        Distribution::pareto(2.0, 2.0), Distribution::lomax(5.0, 1.0)}) {
    for (double s : {1.0, 2.0}) {
      if (d.family() == Family::kPareto && d.param1() * s <= 2.0) continue;
      const auto grid = default_grid(d, 200, 0.95);
      const auto curve = reconstruct_survival(dwcregf_curve(d, s), s, grid);
      EXPECT_LT(sup_error(d, curve), 1e-4) << d.name() << " s=" << s;
      for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_LE(curve.values()[i], curve.values()[i - 1]);
    }
  }
}

TEST(ReconstructSurvival, UniquenessUnderTinyPerturbation) {
  const auto d = Distribution::exponential(1.0);
  const AgeCurve exact = dwcregf_curve(d, 1.0);
  const AgeCurve perturbed = [exact](double t) { return exact(t) + 1e-11 * std::sin(3.0 * t); };
  const auto grid = linspace(0.0, 4.0, 101);
  const auto a = reconstruct_survival(exact, 1.0, grid);
  const auto b = reconstruct_survival(perturbed, 1.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(a.values()[i], b.values()[i], 1e-6);
}

TEST(ReconstructSurvival, GridValidation) {
  const AgeCurve c = [](double) { return 1.0; };
  EXPECT_THROW(reconstruct_survival(c, 1.0, std::vector<double>{0.5, 1.0}), InvalidArgument);
  EXPECT_THROW(reconstruct_survival(c, 1.0, std::vector<double>{0.0, 1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(reconstruct_survival(c, 1.0, std::vector<double>{}), InvalidArgument);
}

TEST(CurveOnGrid, Validation) {
  EXPECT_THROW(CurveOnGrid({0.0, 1.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(CurveOnGrid({1.0, 0.5}, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(CurveOnGrid({-1.0, 0.5}, {1.0, 1.0}), InvalidArgument);
  EXPECT_NO_THROW(CurveOnGrid({0.0, 0.5}, {1.0, 1.0}));
}

TEST(DefaultGrid, SpansToUpperQuantile) {
  const auto d = Distribution::rayleigh(1.0);
  const auto grid = default_grid(d);
  ASSERT_EQ(grid.size(), 200u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_DOUBLE_EQ(grid.back(), d.quantile(0.99));
}

TEST(ConstancyIndex, Examples) {
  for (double s : {0.5, 1.0, 2.0, 5.0}) {
    EXPECT_LT(constancy_index(Distribution::rayleigh(2.0), s, linspace(0.0, 4.0, 41)), 1e-9);
  }
  const std::vector<double> grid{0.0, 1.0, 2.0};
  EXPECT_DOUBLE_EQ(constancy_index(Distribution::exponential(1.0), 1.0, grid), 2.0);
  EXPECT_GT(constancy_index(Distribution::uniform(0.0, 1.0), 1.0, linspace(0.0, 0.9, 10)), 0.1);
}

TEST(WmrlIdentityGap, Examples) {
  EXPECT_LT(wmrl_identity_gap(Distribution::rayleigh(1.5), 3.0, linspace(0.0, 3.0, 31)), 1e-9);
  const std::vector<double> origin{0.0};
  EXPECT_NEAR(wmrl_identity_gap(Distribution::exponential(1.0), 2.0, origin), 0.5, 1e-14);
  for (const auto& d : {Distribution::exponential(1.0), Distribution::uniform(0.0, 2.0), Distribution::lomax(5.0, 1.0)}) {
    EXPECT_LT(wmrl_identity_gap(d, 1.0, default_grid(d, 20, 0.9)), 1e-12) << d.name();
  }
}

}  // namespace
}  // namespace wcre
