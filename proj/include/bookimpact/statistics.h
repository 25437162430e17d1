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


#ifndef BOOKIMPACT_STATISTICS_H_
#define BOOKIMPACT_STATISTICS_H_

#include <span>
#include <string>
#include <vector>

namespace bookimpact {

// Regularized incomplete beta I_x(a, b), by Lentz's continued fraction.
double RegularizedIncompleteBeta(double x, double a, double b);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailed(double t, double df);

// Sample Pearson correlation. Throws Error on a length mismatch, fewer than
// three points, or a constant vector.
double Pearson(std::span<const double> x, std::span<const double> y);

// Ranks 1..n with ties sharing the mean of their positions.
std::vector<double> FractionalRanks(std::span<const double> values);

// Pearson on fractional ranks.
double Spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationResult {
  double r = 0.0;
  int n = 0;
  double t = 0.0;
  double p_two_tailed = 1.0;
  bool sig_005 = false;
  bool sig_001 = false;

  // "**" at 0.01, "*" at 0.05, "" otherwise.
  std::string Stars() const;
};

// t = r sqrt(n-2) / sqrt(1-r^2) against Student's t with n-2 degrees of
// freedom; |r| = 1 gives p = 0. Throws Error for n < 3.
CorrelationResult Significance(double r, int n);

enum class CorrelationMethod { kPearson, kSpearman };

CorrelationResult Correlate(std::span<const double> x,
                            std::span<const double> y,
                            CorrelationMethod method = CorrelationMethod::kPearson);

}  // namespace bookimpact

#endif  // BOOKIMPACT_STATISTICS_H_
