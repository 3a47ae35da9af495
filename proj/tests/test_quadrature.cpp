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

#include "wcre/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "wcre/error.hpp"
#include "wcre/numeric.hpp"

namespace wcre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(Quadrature, Polynomial) {
  const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-15);
}

TEST(Quadrature, ExponentialTail) {
  const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(Quadrature, AlgebraicTail) {
  const auto r = integrate([](double x) { return std::pow(x, -3.0); }, 1.0, kInf);
  EXPECT_NEAR(r.value, 0.5, 1e-11);
}

TEST(Quadrature, HeavyTailWithScale) {
  QuadratureOptions opts;
  opts.tail_scale = 10.0;
  const auto r = integrate([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, 0.0, kInf, opts);
  EXPECT_NEAR(r.value, 1.0, 1e-11);
}

TEST(Quadrature, GaussianIntegral) {
  const auto r = integrate([](double x) { return std::exp(-0.5 * x * x); }, 0.0, kInf);
  EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi / 2.0), 1e-12);
}

TEST(Quadrature, BreakpointAtKink) {
  const std::vector<double> breaks{0.3};
  const auto r = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, {}, breaks);
  EXPECT_NEAR(r.value, 0.29, 1e-14);
}

TEST(Quadrature, EndpointSingularity) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts);
  EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, EmptyRangeIsZero) {
  const auto r = integrate([](double x) { return x; }, 2.0, 2.0);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Quadrature, ReversedRangeRejected) {
  EXPECT_THROW(integrate([](double x) { return x; }, 1.0, 0.0), InvalidArgument);
}

TEST(Quadrature, NonFiniteIntegrandRejected) {
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericalError);
}

TEST(Quadrature, ErrorEstimateIsHonest) {
  const auto r = integrate([](double x) { return std::sin(x) * std::sin(x); }, 0.0, 10.0);
  const double exact = 5.0 - std::sin(20.0) / 4.0;
  EXPECT_LE(std::abs(r.value - exact), std::max(r.abs_error, 1e-14));
}

TEST(CompensatedSum, RecoversCancelledBits) {
  CompensatedSum sum;
  sum += 1e16;
  sum += 1.0;
  sum += -1e16;
  EXPECT_EQ(sum.value(), 1.0);
}

TEST(CompensatedSum, MergeIsAssociativeEnough) {
  CompensatedSum a;
  CompensatedSum b;
  for (int i = 0; i < 1000; ++i) a += 0.1;
  for (int i = 0; i < 1000; ++i) b += 0.1;
  a += b;
  EXPECT_NEAR(a.value(), 200.0, 1e-12);
}

}  // namespace
}  // namespace wcre
