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


#ifndef BOOKIMPACT_PIPELINE_H_
#define BOOKIMPACT_PIPELINE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bookimpact/analysis.h"
#include "bookimpact/corpus.h"
#include "bookimpact/factors.h"
#include "bookimpact/parallel.h"
#include "bookimpact/scoring.h"
#include "bookimpact/sentiment_macro.h"
#include "bookimpact/sentiment_micro.h"
#include "bookimpact/statistics.h"

namespace bookimpact {

struct PipelineConfig {
  CombinationSpec combination;
  int min_reviews = 10;
  int top_n_aspects = 10;
  bool global_aspects = false;  // one aspect set over every discipline
  FactorOptions factor_options;
  CorrelationMethod method = CorrelationMethod::kPearson;
  Execution execution = Execution::kParallel;
};

struct PipelineResources {
  const PolarityModel *model = nullptr;
  const SentimentLexicon *lexicon = nullptr;
  const AspectVocabulary *vocabulary = nullptr;
};

// One discipline after filtering, with its aspect set and per-book factors.
struct DisciplineRun {
  std::string discipline;
  std::vector<Book> books;  // ascending book_id
  AspectSet aspects;
  std::vector<BookFactors> factors;  // aligned to books

  Citations citations() const;
};

// Filters the corpus, partitions it by discipline, selects aspects, and
// computes every book factor. Throws Error if nothing survives the filter
// or a discipline is left with fewer than `min_books` books.
std::vector<DisciplineRun> PrepareDisciplines(const Corpus &corpus,
                                              const PipelineResources &res,
                                              const PipelineConfig &config,
                                              size_t min_books = 2);

struct DisciplineScore {
  std::string discipline;
  FactorMatrix matrix;
  EntropyFusion fusion;
};

DisciplineScore ScoreDiscipline(const DisciplineRun &run,
                                const CombinationSpec &spec,
                                bool use_directions = true);

struct CorrelationCell {
  std::optional<CorrelationResult> result;
  std::string error;
};

// One table row: a combination level, a single factor, an aspect or an
// aspect category, with one cell per discipline.
struct CorrelationRow {
  std::string section;
  std::string label;
  std::map<std::string, CorrelationCell> cells;  // by discipline
};

struct CorrelationReport {
  std::vector<std::string> disciplines;
  std::vector<CorrelationRow> rows;
};

// Score-level rows for all six combinations, single-factor rows for both
// parts, per-aspect rows (helpfulness-weighted values), and per-category
// rows.
CorrelationReport BuildCorrelationReport(const std::vector<DisciplineRun> &runs,
                                         const AspectCategoryMap &categories,
                                         CorrelationMethod method,
                                         bool use_directions = true);

}  // namespace bookimpact

#endif  // BOOKIMPACT_PIPELINE_H_
