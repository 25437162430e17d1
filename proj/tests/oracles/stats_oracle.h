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


#ifndef BOOKIMPACT_TESTS_ORACLES_STATS_ORACLE_H_
#define BOOKIMPACT_TESTS_ORACLES_STATS_ORACLE_H_

// Textbook correlation formulas in 50-digit arithmetic, and Student t tail
// probabilities from Boost.Math.

#include <cmath>
#include <vector>

#include <boost/math/distributions/students_t.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace bookimpact::oracle {

using High = boost::multiprecision::cpp_bin_float_50;

// r = (n Σxy − Σx Σy) / sqrt((n Σx² − (Σx)²)(n Σy² − (Σy)²))
inline double TextbookPearson(const std::vector<double> &x, const std::vector<double> &y) {
  const High n = x.size();
  High sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const High a = x[i], b = y[i];
    sx += a;
    sy += b;
    sxx += a * a;
    syy += b * b;
    sxy += a * b;
  }
  const High r = (n * sxy - sx * sy) / sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  return static_cast<double>(r);
}

inline double TwoTailedP(double r, int n) {
  const double df = n - 2;
  if (std::abs(r) >= 1.0) return 0.0;
  const double t = r * std::sqrt(df) / std::sqrt(1.0 - r * r);
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace bookimpact::oracle

#endif  // BOOKIMPACT_TESTS_ORACLES_STATS_ORACLE_H_
