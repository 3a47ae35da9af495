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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "wcre/error.hpp"
#include "wcre/numeric.hpp"

namespace wcre {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208087310407, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for kKronrodNodes[1], [3], [5], [7], [9].
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Interval {
  double lo;
  double hi;
  double value;
  double error;
  int piece;
  bool operator<(const Interval& other) const { return error < other.error; }
};

using Integrand = std::function<double(double)>;

struct Estimate {
  double value;
  double error;
};

Estimate kronrod21(const Integrand& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(center);
  double kronrod = fc * kKronrodWeights[10];
  double abs_kronrod = std::fabs(kronrod);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  double gauss = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    f1[j] = g(center - dx);
    f2[j] = g(center + dx);
    kronrod += kKronrodWeights[j] * (f1[j] + f2[j]);
    abs_kronrod += kKronrodWeights[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1[j] + f2[j]);
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    asc += kKronrodWeights[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  }
  const double value = kronrod * half;
  const double resabs = abs_kronrod * std::fabs(half);
  const double resasc = asc * std::fabs(half);
  double error = std::fabs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * resabs, error);
  }
  if (!std::isfinite(value) || !std::isfinite(error)) {
    throw NumericalError("quadrature: non-finite integrand value");
  }
  return {value, error};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options,
                           std::span<const double> breakpoints) {
  if (!(a <= b) || std::isnan(a) || std::isinf(a)) {
    throw InvalidArgument("quadrature: require finite a <= b");
  }
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }

  std::vector<double> points{a};
  for (double p : breakpoints) {
    if (p > a && p < b && std::isfinite(p)) points.push_back(p);
  }
  std::sort(points.begin() + 1, points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const bool infinite = std::isinf(b);
  if (!infinite) points.push_back(b);

  // Piece k < points.size() - 1 is [points[k], points[k+1]] in x; the last
  // piece of an infinite range is (0, 1] in u.
  std::vector<Integrand> pieces;
  std::vector<std::pair<double, double>> ranges;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    pieces.push_back(f);
    ranges.emplace_back(points[k], points[k + 1]);
  }
  if (infinite) {
    const double start = points.back();
    const double scale =
        options.tail_scale > 0.0 ? options.tail_scale : std::max(1.0, std::fabs(start));
    pieces.emplace_back([&f, start, scale](double u) {
      const double x = start + scale * (1.0 - u) / u;
      if (!std::isfinite(x)) return 0.0;
      const double fx = f(x);
      if (fx == 0.0) return 0.0;
      return fx * (scale / u) / u;
    });
    ranges.emplace_back(0.0, 1.0);
  }

  std::priority_queue<Interval> queue;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto est = kronrod21(pieces[k], ranges[k].first, ranges[k].second);
    result.evaluations += 21;
    queue.push({ranges[k].first, ranges[k].second, est.value, est.error,
                static_cast<int>(k)});
  }

  auto totals = [&queue]() {
    // Summation over a copy keeps the heap intact; intervals are few.
    auto copy = queue;
    CompensatedSum value;
    CompensatedSum error;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value.value(), error.value()};
  };

  double value = 0.0;
  double error = 0.0;
  std::vector<Interval> frozen;
  int intervals = static_cast<int>(queue.size());
  // Running totals are updated incrementally and re-synchronised at the end.
  std::tie(value, error) = totals();
  while (!queue.empty()) {
    if (error <= std::max(options.abs_tol, options.rel_tol * std::fabs(value))) break;
    if (intervals >= options.max_intervals) break;
    const Interval worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      queue.pop();
      frozen.push_back(worst);
      continue;
    }
    queue.pop();
    const auto& g = pieces[worst.piece];
    const auto left = kronrod21(g, worst.lo, mid);
    const auto right = kronrod21(g, mid, worst.hi);
    result.evaluations += 42;
    ++intervals;
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    queue.push({worst.lo, mid, left.value, left.error, worst.piece});
    queue.push({mid, worst.hi, right.value, right.error, worst.piece});
  }
  for (const auto& iv : frozen) queue.push(iv);
  std::tie(value, error) = totals();
  result.value = value;
  result.abs_error = error;
  result.converged = error <= std::max(options.abs_tol, options.rel_tol * std::fabs(value));
  return result;
}

}  // namespace wcre
