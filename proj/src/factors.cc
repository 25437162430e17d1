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


#include "bookimpact/factors.h"

#include <charconv>

#include <omp.h>

#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact {
namespace {

void RequireReviews(const Book &book) {
  if (book.reviews.empty()) {
    throw Error("book " + book.book_id + " has no reviews");
  }
}

}  // namespace

void SetThreadCount(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int MaxThreads() { return omp_get_max_threads(); }

double Helpfulness(const Review &review, bool smoothing) {
  if (smoothing) {
    return static_cast<double>(review.helpful_yes + 1) /
           static_cast<double>(review.helpful_total + 2);
  }
  if (review.helpful_total == 0) return 0.0;
  return static_cast<double>(review.helpful_yes) /
         static_cast<double>(review.helpful_total);
}

double StarValue(const Book &book) {
  RequireReviews(book);
  int64_t sum = 0;
  for (const Review &review : book.reviews) sum += review.star;
  return static_cast<double>(sum) / static_cast<double>(book.reviews.size());
}

double StarValueWeighted(const Book &book, bool smoothing) {
  RequireReviews(book);
  double sum = 0.0;
  for (const Review &review : book.reviews) {
    sum += review.star * Helpfulness(review, smoothing);
  }
  return sum / static_cast<double>(book.reviews.size());
}

double HelpfulnessFactor(const Book &book, bool smoothing) {
  RequireReviews(book);
  double sum = 0.0;
  for (const Review &review : book.reviews) sum += Helpfulness(review, smoothing);
  return sum / static_cast<double>(book.reviews.size());
}

std::vector<double> AspectValues(const Book &book, const AspectSet &aspects,
                                 const SentimentLexicon &lexicon, Scope scope,
                                 bool weighted, bool smoothing) {
  std::vector<double> values;
  values.reserve(aspects.aspects.size());
  std::vector<AspectPolarity> polarities;
  std::vector<double> helpfulness;
  for (const auto &[aspect, freq] : aspects.aspects) {
    polarities.clear();
    helpfulness.clear();
    for (const Review &review : book.reviews) {
      polarities.push_back(ComputeAspectPolarity(review, aspect, lexicon, scope));
      helpfulness.push_back(Helpfulness(review, smoothing));
    }
    values.push_back(weighted ? AspectValueWeighted(polarities, helpfulness)
                              : AspectValue(polarities));
  }
  return values;
}

double AspectFactor(const Book &book, const AspectSet &aspects,
                    const SentimentLexicon &lexicon, Scope scope, bool weighted,
                    bool smoothing) {
  if (aspects.aspects.empty()) throw Error("aspect set is empty");
  double sum = 0.0;
  for (double v : AspectValues(book, aspects, lexicon, scope, weighted, smoothing)) {
    sum += v;
  }
  return sum / static_cast<double>(aspects.aspects.size());
}

std::string CombinationSpec::ToString() const {
  std::string out = part == Part::kReviewHolder ? "review_holder" : "holder_and_evaluator";
  out += '/';
  out += level == Level::kMacro ? "macro" : level == Level::kMicro ? "micro" : "macro_micro";
  return out;
}

CombinationSpec CombinationSpec::Parse(std::string_view text) {
  for (const CombinationSpec &spec : All()) {
    if (spec.ToString() == text) return spec;
  }
  throw Error("unknown combination '" + std::string(text) +
              "' (expected <review_holder|holder_and_evaluator>/"
              "<macro|micro|macro_micro>)");
}

std::array<CombinationSpec, 6> CombinationSpec::All() {
  std::array<CombinationSpec, 6> all;
  size_t i = 0;
  for (Part part : {Part::kReviewHolder, Part::kHolderAndEvaluator}) {
    for (Level level : {Level::kMacro, Level::kMicro, Level::kMacroMicro}) {
      all[i++] = {part, level};
    }
  }
  return all;
}

std::vector<std::string> FactorColumns(const CombinationSpec &spec) {
  const bool evaluator = spec.part == Part::kHolderAndEvaluator;
  const bool macro = spec.level != Level::kMicro;
  const bool micro = spec.level != Level::kMacro;
  std::vector<std::string> columns;
  if (macro) {
    columns.emplace_back(kNPositive);
    columns.emplace_back(kNNegative);
  }
  if (micro) columns.emplace_back(evaluator ? kAspectWeighted : kAspect);
  columns.emplace_back(evaluator ? kStarWeighted : kStar);
  if (evaluator) columns.emplace_back(kHelpfulness);
  return columns;
}

Direction DefaultDirection(std::string_view factor, bool use_directions) {
  if (use_directions && factor == kNNegative) return Direction::kCost;
  return Direction::kBenefit;
}

std::vector<double> FactorMatrix::Column(size_t col) const {
  std::vector<double> column(rows());
  for (size_t i = 0; i < rows(); ++i) column[i] = at(i, col);
  return column;
}

double BookFactors::Get(std::string_view factor) const {
  if (factor == kNPositive) return static_cast<double>(counts.n_positive);
  if (factor == kNNegative) return static_cast<double>(counts.n_negative);
  if (factor == kAspect) return aspect;
  if (factor == kAspectWeighted) return aspect_weighted;
  if (factor == kStar) return star;
  if (factor == kStarWeighted) return star_weighted;
  if (factor == kHelpfulness) return helpfulness;
  throw Error("unknown factor '" + std::string(factor) + "'");
}

BookFactors ComputeBookFactors(const Book &book, const PolarityModel &model,
                               const AspectSet &aspects,
                               const SentimentLexicon &lexicon,
                               const FactorOptions &options) {
  BookFactors f;
  f.counts = CountPolarities(book, model);
  f.star = StarValue(book);
  f.star_weighted = StarValueWeighted(book, options.smoothing);
  f.helpfulness = HelpfulnessFactor(book, options.smoothing);
  if (!aspects.aspects.empty()) {
    f.aspect_values = AspectValues(book, aspects, lexicon, options.scope, false,
                                   options.smoothing);
    f.aspect_values_weighted = AspectValues(book, aspects, lexicon, options.scope,
                                            true, options.smoothing);
    double sum = 0.0;
    double sum_weighted = 0.0;
    for (size_t a = 0; a < f.aspect_values.size(); ++a) {
      sum += f.aspect_values[a];
      sum_weighted += f.aspect_values_weighted[a];
    }
    const auto n = static_cast<double>(f.aspect_values.size());
    f.aspect = sum / n;
    f.aspect_weighted = sum_weighted / n;
  }
  return f;
}

std::vector<BookFactors> ComputeAllBookFactors(
    std::span<const Book> books, const PolarityModel &model,
    const AspectSet &aspects, const SentimentLexicon &lexicon,
    const FactorOptions &options, Execution execution) {
  for (const Book &book : books) RequireReviews(book);
  std::vector<BookFactors> out(books.size());
  const auto n = static_cast<int64_t>(books.size());
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < n; ++i) {
      out[i] = ComputeBookFactors(books[i], model, aspects, lexicon, options);
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      out[i] = ComputeBookFactors(books[i], model, aspects, lexicon, options);
    }
  }
  return out;
}

FactorMatrix AssembleFactorMatrix(std::span<const Book> books,
                                  std::span<const BookFactors> factors,
                                  const CombinationSpec &spec,
                                  bool use_directions) {
  if (books.empty()) throw Error("cannot build a factor matrix for no books");
  if (books.size() != factors.size()) {
    throw Error("books and factor rows differ in count");
  }
  FactorMatrix matrix;
  matrix.factor_names = FactorColumns(spec);
  for (const auto &name : matrix.factor_names) {
    matrix.directions.push_back(DefaultDirection(name, use_directions));
  }
  for (size_t i = 0; i < books.size(); ++i) {
    if (i > 0 && !(books[i - 1].book_id < books[i].book_id)) {
      throw Error("books must be in ascending book_id order");
    }
    matrix.book_ids.push_back(books[i].book_id);
    for (const auto &name : matrix.factor_names) {
      matrix.values.push_back(factors[i].Get(name));
    }
  }
  return matrix;
}

FactorMatrix BuildFactorMatrix(std::span<const Book> books,
                               const PolarityModel &model,
                               const AspectSet &aspects,
                               const SentimentLexicon &lexicon,
                               const CombinationSpec &spec,
                               const FactorOptions &options,
                               Execution execution) {
  if (books.empty()) throw Error("cannot build a factor matrix for no books");
  auto factors =
      ComputeAllBookFactors(books, model, aspects, lexicon, options, execution);
  return AssembleFactorMatrix(books, factors, spec, options.use_directions);
}

std::string FactorMatrixToCsv(const FactorMatrix &matrix) {
  std::string out = "book_id";
  for (const auto &name : matrix.factor_names) out += "," + CsvEscape(name);
  out += '\n';
  for (size_t i = 0; i < matrix.rows(); ++i) {
    out += CsvEscape(matrix.book_ids[i]);
    for (size_t j = 0; j < matrix.cols(); ++j) {
      out += "," + FormatDouble(matrix.at(i, j));
    }
    out += '\n';
  }
  return out;
}

FactorMatrix ParseFactorMatrixCsv(const std::string &contents,
                                  bool use_directions) {
  auto rows = ParseCsv(contents);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "book_id") {
    throw Error("factor CSV must start with a book_id column");
  }
  FactorMatrix matrix;
  matrix.factor_names.assign(rows[0].begin() + 1, rows[0].end());
  for (const auto &name : matrix.factor_names) {
    matrix.directions.push_back(DefaultDirection(name, use_directions));
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != rows[0].size()) {
      throw Error("factor CSV row " + std::to_string(r + 1) + " has " +
                  std::to_string(row.size()) + " fields");
    }
    matrix.book_ids.push_back(row[0]);
    for (size_t c = 1; c < row.size(); ++c) {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(row[c].data(), row[c].data() + row[c].size(), value);
      if (ec != std::errc() || ptr != row[c].data() + row[c].size()) {
        throw Error("factor CSV row " + std::to_string(r + 1) +
                    ": not a number '" + row[c] + "'");
      }
      matrix.values.push_back(value);
    }
  }
  return matrix;
}

}  // namespace bookimpact
