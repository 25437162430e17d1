// Copyright 2026 The Bookimpact Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "bookimpact/statistics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bookimpact/error.h"

namespace bookimpact {
namespace {

// Continued fraction for I_x(a, b), modified Lentz. Converges quickly for
// x < (a + 1) / (a + b + 2).
double BetaContinuedFraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEpsilon = 1e-16;
  constexpr int kMaxIterations = 10000;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) return h;
  }
  throw Error("incomplete beta continued fraction did not converge");
}

}  // namespace

double RegularizedIncompleteBeta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
    throw Error("incomplete beta arguments out of range");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(x, a, b) / a;
  }
  return 1.0 - front * BetaContinuedFraction(1.0 - x, b, a) / b;
}

double StudentTTwoTailed(double t, double df) {
  if (!(df > 0.0)) throw Error("degrees of freedom must be positive");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return std::clamp(RegularizedIncompleteBeta(x, 0.5 * df, 0.5), 0.0, 1.0);
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("correlation inputs differ in length");
  const size_t n = x.size();
  if (n < 3) throw Error("correlation needs at least three observations");
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const bool constant_x = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
  const bool constant_y = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
  if (constant_x || constant_y || sxx == 0.0 || syy == 0.0) {
    throw Error("correlation is undefined for a constant vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> FractionalRanks(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  size_t start = 0;
  while (start < order.size()) {
    size_t end = start + 1;
    while (end < order.size() && values[order[end]] == values[order[start]]) ++end;
    // Positions start+1 .. end share their mean.
    const double rank = 0.5 * static_cast<double>(start + 1 + end);
    for (size_t k = start; k < end; ++k) ranks[order[k]] = rank;
    start = end;
  }
  return ranks;
}

double Spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("correlation inputs differ in length");
  const auto rx = FractionalRanks(x);
  const auto ry = FractionalRanks(y);
  return Pearson(rx, ry);
}

std::string CorrelationResult::Stars() const {
  return sig_001 ? "**" : sig_005 ? "*" : "";
}

CorrelationResult Significance(double r, int n) {
  if (n < 3) throw Error("significance needs at least three observations");
  if (!(r >= -1.0 && r <= 1.0)) throw Error("correlation outside [-1, 1]");
  CorrelationResult out;
  out.r = r;
  out.n = n;
  const double df = n - 2;
  if (std::fabs(r) == 1.0) {
    out.t = std::copysign(std::numeric_limits<double>::infinity(), r);
    out.p_two_tailed = 0.0;
  } else {
    out.t = r * std::sqrt(df) / std::sqrt(1.0 - r * r);
    out.p_two_tailed = StudentTTwoTailed(out.t, df);
  }
  out.sig_005 = out.p_two_tailed < 0.05;
  out.sig_001 = out.p_two_tailed < 0.01;
  return out;
}

CorrelationResult Correlate(std::span<const double> x, std::span<const double> y,
                            CorrelationMethod method) {
  const double r = method == CorrelationMethod::kSpearman ? Spearman(x, y)
                                                          : Pearson(x, y);
  return Significance(r, static_cast<int>(x.size()));
}

}  // namespace bookimpact
