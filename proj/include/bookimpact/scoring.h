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


#ifndef BOOKIMPACT_SCORING_H_
#define BOOKIMPACT_SCORING_H_

#include <span>
#include <string>
#include <vector>

#include "bookimpact/factors.h"

namespace bookimpact {

// Column-stochastic matrix, stored column by column.
struct NormalizedMatrix {
  size_t n_books = 0;
  std::vector<std::vector<double>> columns;  // each sums to 1
  std::vector<bool> degenerate;              // constant input column

  double at(size_t row, size_t col) const { return columns[col][row]; }
};

// Min-max rescale per column (reversed for cost columns), then divide by
// the column sum. A constant column becomes uniform 1/N and is flagged
// degenerate. Throws Error with fewer than two books or no factors.
NormalizedMatrix Normalize(const FactorMatrix &matrix);

// -(1/ln n) * sum(p ln p), with 0 ln 0 = 0, clamped to [0, 1].
double ColumnEntropy(std::span<const double> p, size_t n_books);

struct EntropyWeights {
  std::vector<double> entropy;
  std::vector<double> weight;
  bool uniform_fallback = false;  // every column had entropy 1
};

// w_j = (1 - e_j) / sum_k (1 - e_k); uniform when the denominator is 0.
EntropyWeights ComputeEntropyWeights(std::span<const double> entropies);

struct ImpactScores {
  std::vector<std::string> book_ids;
  std::vector<double> score;
  std::vector<int> rank;  // dense, 1 = highest
};

// Dense ranking by value descending; equal values share a rank.
std::vector<int> DenseRank(std::span<const double> values);

// SB_i = sum_j p_ij * w_j. Throws Error on a dimension mismatch.
ImpactScores ComputeImpactScores(const NormalizedMatrix &p,
                                 const EntropyWeights &weights,
                                 std::vector<std::string> book_ids);

// All four steps.
struct EntropyFusion {
  NormalizedMatrix normalized;
  EntropyWeights weights;
  ImpactScores scores;
};

EntropyFusion FuseFactors(const FactorMatrix &matrix);

// "book_id,score,rank" rows.
std::string ScoresToCsv(const ImpactScores &scores);

}  // namespace bookimpact

#endif  // BOOKIMPACT_SCORING_H_
