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


#include "bookimpact/pipeline.h"

#include "bookimpact/error.h"

namespace bookimpact {
namespace {

CorrelationCell MakeCell(const std::vector<double> &x, const std::vector<double> &y,
                         CorrelationMethod method) {
  CorrelationCell cell;
  try {
    cell.result = Correlate(x, y, method);
  } catch (const Error &e) {
    cell.error = e.what();
  }
  return cell;
}

std::vector<double> CitationVector(const DisciplineRun &run) {
  std::vector<double> y;
  for (const Book &book : run.books) y.push_back(static_cast<double>(book.citation_count));
  return y;
}

const char *PartName(Part part) {
  return part == Part::kReviewHolder ? "review_holder" : "holder_and_evaluator";
}

}  // namespace

Citations DisciplineRun::citations() const {
  Citations out;
  for (const Book &book : books) out[book.book_id] = book.citation_count;
  return out;
}

std::vector<DisciplineRun> PrepareDisciplines(const Corpus &corpus,
                                              const PipelineResources &res,
                                              const PipelineConfig &config,
                                              size_t min_books) {
  if (res.model == nullptr || res.lexicon == nullptr || res.vocabulary == nullptr) {
    throw Error("pipeline resources are incomplete");
  }
  Corpus filtered = FilterBooks(corpus, config.min_reviews);
  if (filtered.books.empty()) {
    throw Error("no book has more than " + std::to_string(config.min_reviews) +
                " reviews");
  }

  AspectSet global;
  if (config.global_aspects) {
    global = TopAspects(ExtractCandidates(std::span<const Book>(filtered.books),
                                          *res.vocabulary),
                        config.top_n_aspects, "*");
  }

  std::vector<DisciplineRun> runs;
  for (const auto &[discipline, ids] : filtered.discipline_index) {
    DisciplineRun run;
    run.discipline = discipline;
    run.books = BooksInDiscipline(filtered, discipline);
    if (run.books.size() < min_books) {
      throw Error("discipline '" + discipline + "' has " +
                  std::to_string(run.books.size()) + " book(s) after filtering; "
                  "at least " + std::to_string(min_books) + " are required");
    }
    run.aspects = config.global_aspects
                      ? global
                      : TopAspects(ExtractCandidates(std::span<const Book>(run.books),
                                                     *res.vocabulary),
                                   config.top_n_aspects, discipline);
    run.factors = ComputeAllBookFactors(run.books, *res.model, run.aspects,
                                        *res.lexicon, config.factor_options,
                                        config.execution);
    runs.push_back(std::move(run));
  }
  return runs;
}

DisciplineScore ScoreDiscipline(const DisciplineRun &run,
                                const CombinationSpec &spec,
                                bool use_directions) {
  DisciplineScore out;
  out.discipline = run.discipline;
  out.matrix = AssembleFactorMatrix(run.books, run.factors, spec, use_directions);
  out.fusion = FuseFactors(out.matrix);
  return out;
}

CorrelationReport BuildCorrelationReport(const std::vector<DisciplineRun> &runs,
                                         const AspectCategoryMap &categories,
                                         CorrelationMethod method,
                                         bool use_directions) {
  CorrelationReport report;
  for (const auto &run : runs) report.disciplines.push_back(run.discipline);

  auto row_for = [&](const std::string &section, const std::string &label) -> CorrelationRow & {
    for (auto &row : report.rows) {
      if (row.section == section && row.label == label) return row;
    }
    report.rows.push_back({section, label, {}});
    return report.rows.back();
  };

  // Fix the row order up front: scores, factors, aspects, categories.
  for (const auto &spec : CombinationSpec::All()) {
    const std::string level = spec.level == Level::kMacro   ? "macro"
                              : spec.level == Level::kMicro ? "micro"
                                                            : "macro_micro";
    row_for(std::string("scores:") + PartName(spec.part), level);
  }
  const std::vector<std::pair<Part, std::vector<std::string_view>>> factor_rows = {
      {Part::kReviewHolder, {kStar, kNPositive, kNNegative, kAspect}},
      {Part::kHolderAndEvaluator,
       {kStarWeighted, kNPositive, kNNegative, kAspectWeighted, kHelpfulness}},
  };
  for (const auto &[part, names] : factor_rows) {
    for (auto name : names) row_for(std::string("factors:") + PartName(part), std::string(name));
  }
  for (const auto &run : runs) {
    for (const auto &word : run.aspects.words()) row_for("aspects", word);
  }
  for (const auto &[category, members] : categories.categories) {
    row_for("categories", category);
  }

  for (const auto &run : runs) {
    const auto y = CitationVector(run);
    for (const auto &spec : CombinationSpec::All()) {
      const std::string level = spec.level == Level::kMacro   ? "macro"
                                : spec.level == Level::kMicro ? "micro"
                                                              : "macro_micro";
      CorrelationCell cell;
      try {
        DisciplineScore score = ScoreDiscipline(run, spec, use_directions);
        cell = MakeCell(score.fusion.scores.score, y, method);
      } catch (const Error &e) {
        cell.error = e.what();
      }
      row_for(std::string("scores:") + PartName(spec.part), level).cells[run.discipline] = cell;
    }
    for (const auto &[part, names] : factor_rows) {
      for (auto name : names) {
        std::vector<double> x;
        for (const auto &f : run.factors) x.push_back(f.Get(name));
        row_for(std::string("factors:") + PartName(part), std::string(name))
            .cells[run.discipline] = MakeCell(x, y, method);
      }
    }
    const auto words = run.aspects.words();
    for (size_t a = 0; a < words.size(); ++a) {
      std::vector<double> x;
      for (const auto &f : run.factors) x.push_back(f.aspect_values_weighted[a]);
      row_for("aspects", words[a]).cells[run.discipline] = MakeCell(x, y, method);
    }
    std::vector<std::vector<double>> values;
    for (const auto &f : run.factors) values.push_back(f.aspect_values_weighted);
    for (size_t c = 0; c < categories.categories.size(); ++c) {
      CorrelationCell cell;
      try {
        AspectCategoryMap single;
        single.categories = {categories.categories[c]};
        cell = MakeCell(GroupAspectValues(values, words, single)[0], y, method);
      } catch (const Error &e) {
        cell.error = e.what();
      }
      row_for("categories", categories.categories[c].first).cells[run.discipline] = cell;
    }
  }
  return report;
}

}  // namespace bookimpact
