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


#ifndef BOOKIMPACT_FACTORS_H_
#define BOOKIMPACT_FACTORS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bookimpact/corpus.h"
#include "bookimpact/parallel.h"
#include "bookimpact/sentiment_macro.h"
#include "bookimpact/sentiment_micro.h"

namespace bookimpact {

// helpful_yes / helpful_total, 0 when there are no votes. With smoothing,
// (yes + 1) / (total + 2).
double Helpfulness(const Review &review, bool smoothing = false);

// Mean star rating. Throws Error for a book without reviews.
double StarValue(const Book &book);

// sum(star * h) / n_reviews. Throws Error for a book without reviews.
double StarValueWeighted(const Book &book, bool smoothing = false);

// Mean helpfulness over the book's reviews.
double HelpfulnessFactor(const Book &book, bool smoothing = false);

// Per-aspect sentiment values of one book, in aspect-set order. Aspects the
// book never mentions (with a non-neutral polarity) are 0.
std::vector<double> AspectValues(const Book &book, const AspectSet &aspects,
                                 const SentimentLexicon &lexicon, Scope scope,
                                 bool weighted, bool smoothing = false);

// Mean of AspectValues over the aspect set. Throws Error if the set is empty.
double AspectFactor(const Book &book, const AspectSet &aspects,
                    const SentimentLexicon &lexicon, Scope scope,
                    bool weighted, bool smoothing = false);

enum class Part { kReviewHolder, kHolderAndEvaluator };
enum class Level { kMacro, kMicro, kMacroMicro };

// One cell of the part x level factor-combination grid.
struct CombinationSpec {
  Part part = Part::kHolderAndEvaluator;
  Level level = Level::kMacroMicro;

  // "<part>/<level>", e.g. "holder_and_evaluator/macro_micro".
  std::string ToString() const;

  // Throws Error on an unknown string.
  static CombinationSpec Parse(std::string_view text);
  static std::array<CombinationSpec, 6> All();

  bool operator==(const CombinationSpec &other) const = default;
};

enum class Direction { kBenefit, kCost };

// Factor column names.
inline constexpr std::string_view kNPositive = "n_positive";
inline constexpr std::string_view kNNegative = "n_negative";
inline constexpr std::string_view kAspect = "aspect_sentiment";
inline constexpr std::string_view kAspectWeighted = "aspect_sentiment_weighted";
inline constexpr std::string_view kStar = "star";
inline constexpr std::string_view kStarWeighted = "star_weighted";
inline constexpr std::string_view kHelpfulness = "helpfulness";

// Columns entering the fusion for a combination, in fixed order.
std::vector<std::string> FactorColumns(const CombinationSpec &spec);

// n_negative is a cost; everything else is a benefit. With
// use_directions = false every column is a benefit.
Direction DefaultDirection(std::string_view factor, bool use_directions = true);

// Books x factors grid, row-major.
struct FactorMatrix {
  std::vector<std::string> book_ids;
  std::vector<std::string> factor_names;
  std::vector<double> values;
  std::vector<Direction> directions;

  size_t rows() const { return book_ids.size(); }
  size_t cols() const { return factor_names.size(); }
  double at(size_t row, size_t col) const { return values[row * cols() + col]; }
  std::vector<double> Column(size_t col) const;

  bool operator==(const FactorMatrix &other) const = default;
};

// Every factor of one book, before column selection.
struct BookFactors {
  PolarityCounts counts;
  double aspect = 0.0;
  double aspect_weighted = 0.0;
  double star = 0.0;
  double star_weighted = 0.0;
  double helpfulness = 0.0;
  std::vector<double> aspect_values;           // per aspect, unweighted
  std::vector<double> aspect_values_weighted;  // per aspect, weighted

  double Get(std::string_view factor) const;

  bool operator==(const BookFactors &other) const = default;
};

struct FactorOptions {
  Scope scope = Scope::kReview;
  bool smoothing = false;
  bool use_directions = true;
};

// Per-book kernel. Throws Error for a book without reviews.
BookFactors ComputeBookFactors(const Book &book, const PolarityModel &model,
                               const AspectSet &aspects,
                               const SentimentLexicon &lexicon,
                               const FactorOptions &options);

// Runs ComputeBookFactors over every book. The parallel path distributes
// books over OpenMP threads and writes each result to its own slot, so the
// output matches the serial path exactly.
std::vector<BookFactors> ComputeAllBookFactors(
    std::span<const Book> books, const PolarityModel &model,
    const AspectSet &aspects, const SentimentLexicon &lexicon,
    const FactorOptions &options, Execution execution = Execution::kParallel);

// Selects the combination's columns. Books must be in ascending book_id
// order; throws Error for an empty book list.
FactorMatrix AssembleFactorMatrix(std::span<const Book> books,
                                  std::span<const BookFactors> factors,
                                  const CombinationSpec &spec,
                                  bool use_directions = true);

FactorMatrix BuildFactorMatrix(std::span<const Book> books,
                               const PolarityModel &model,
                               const AspectSet &aspects,
                               const SentimentLexicon &lexicon,
                               const CombinationSpec &spec,
                               const FactorOptions &options = {},
                               Execution execution = Execution::kParallel);

// CSV: header "book_id,<factor>,...", one row per book.
std::string FactorMatrixToCsv(const FactorMatrix &matrix);

// Reads a factor CSV; directions come from DefaultDirection.
FactorMatrix ParseFactorMatrixCsv(const std::string &contents,
                                  bool use_directions = true);

}  // namespace bookimpact

#endif  // BOOKIMPACT_FACTORS_H_
