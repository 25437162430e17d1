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


#include "bookimpact/scoring.h"

#include <algorithm>
#include <cmath>

#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact {

NormalizedMatrix Normalize(const FactorMatrix &matrix) {
  const size_t n = matrix.rows();
  const size_t m = matrix.cols();
  if (n < 2) throw Error("entropy weighting needs at least two books");
  if (m < 1) throw Error("entropy weighting needs at least one factor");
  if (matrix.values.size() != n * m || matrix.directions.size() != m) {
    throw Error("malformed factor matrix");
  }

  NormalizedMatrix out;
  out.n_books = n;
  out.columns.resize(m);
  out.degenerate.resize(m);
  for (size_t j = 0; j < m; ++j) {
    std::vector<double> column = matrix.Column(j);
    const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
    const double min = *lo;
    const double max = *hi;
    if (!(max > min)) {
      out.columns[j].assign(n, 1.0 / static_cast<double>(n));
      out.degenerate[j] = true;
      continue;
    }
    const double range = max - min;
    const bool cost = matrix.directions[j] == Direction::kCost;
    double sum = 0.0;
    for (double &v : column) {
      v = cost ? (max - v) / range : (v - min) / range;
      sum += v;
    }
    for (double &v : column) v /= sum;
    out.columns[j] = std::move(column);
  }
  return out;
}

double ColumnEntropy(std::span<const double> p, size_t n_books) {
  if (n_books < 2) throw Error("entropy needs at least two books");
  double sum = 0.0;
  for (double v : p) {
    if (v > 0.0) sum += v * std::log(v);
  }
  const double e = -sum / std::log(static_cast<double>(n_books));
  return std::clamp(e, 0.0, 1.0);
}

EntropyWeights ComputeEntropyWeights(std::span<const double> entropies) {
  if (entropies.empty()) throw Error("no entropies to weight");
  EntropyWeights out;
  out.entropy.assign(entropies.begin(), entropies.end());
  // sum_k (1 - e_k) equals m - sum_k e_k; summing the complements keeps
  // columns with e = 1 out of the arithmetic entirely.
  double denominator = 0.0;
  for (double e : entropies) denominator += 1.0 - e;
  const size_t m = entropies.size();
  if (denominator <= 0.0) {
    out.weight.assign(m, 1.0 / static_cast<double>(m));
    out.uniform_fallback = true;
    return out;
  }
  out.weight.resize(m);
  for (size_t j = 0; j < m; ++j) out.weight[j] = (1.0 - entropies[j]) / denominator;
  return out;
}

std::vector<int> DenseRank(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] > values[b]; });
  std::vector<int> rank(values.size());
  int current = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || values[order[k]] != values[order[k - 1]]) ++current;
    rank[order[k]] = current;
  }
  return rank;
}

ImpactScores ComputeImpactScores(const NormalizedMatrix &p,
                                 const EntropyWeights &weights,
                                 std::vector<std::string> book_ids) {
  if (p.columns.size() != weights.weight.size() || book_ids.size() != p.n_books) {
    throw Error("score inputs disagree in dimension");
  }
  ImpactScores out;
  out.book_ids = std::move(book_ids);
  out.score.assign(p.n_books, 0.0);
  for (size_t i = 0; i < p.n_books; ++i) {
    double sum = 0.0;
    for (size_t j = 0; j < p.columns.size(); ++j) {
      sum += p.columns[j][i] * weights.weight[j];
    }
    out.score[i] = sum;
  }
  out.rank = DenseRank(out.score);
  return out;
}

EntropyFusion FuseFactors(const FactorMatrix &matrix) {
  EntropyFusion out;
  out.normalized = Normalize(matrix);
  std::vector<double> entropies(matrix.cols());
  for (size_t j = 0; j < matrix.cols(); ++j) {
    entropies[j] = out.normalized.degenerate[j]
                       ? 1.0
                       : ColumnEntropy(out.normalized.columns[j], matrix.rows());
  }
  out.weights = ComputeEntropyWeights(entropies);
  out.scores = ComputeImpactScores(out.normalized, out.weights, matrix.book_ids);
  return out;
}

std::string ScoresToCsv(const ImpactScores &scores) {
  std::string out = "book_id,score,rank\n";
  for (size_t i = 0; i < scores.book_ids.size(); ++i) {
    out += CsvEscape(scores.book_ids[i]) + "," + FormatDouble(scores.score[i]) +
           "," + std::to_string(scores.rank[i]) + "\n";
  }
  return out;
}

}  // namespace bookimpact
