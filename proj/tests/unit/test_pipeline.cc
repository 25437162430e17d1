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


#include <doctest.h>

#include "bookimpact/error.h"
#include "bookimpact/pipeline.h"
#include "bookimpact/synthgen.h"

using namespace bookimpact;

namespace {

// Two synthetic disciplines merged into one corpus.
struct Fixture {
  Corpus corpus;
  SentimentLexicon lexicon;
  AspectVocabulary vocabulary;
  PolarityModel model;
};

Fixture MakeFixture() {
  Fixture f;
  std::vector<Book> books;
  for (const auto &[seed, name] : {std::pair<uint64_t, const char *>{1, "economics"}, {2, "law"}}) {
    SynthSpec spec;
    spec.seed = seed;
    spec.n_books = 10;
    spec.min_reviews = 8;
    spec.max_reviews = 25;
    spec.training_docs = 100;
    spec.discipline = name;
    SynthCorpus synth = Generate(spec);
    for (Book book : synth.corpus.books) {
      book.book_id = std::string(name).substr(0, 3) + book.book_id;
      for (auto &r : book.reviews) {
        r.book_id = book.book_id;
        r.review_id = book.book_id + r.review_id;
      }
      books.push_back(std::move(book));
    }
    if (seed == 1) {
      f.lexicon = synth.lexicon;
      f.vocabulary = synth.vocabulary;
      f.model = TrainFromDocs(synth.training, {});
    }
  }
  f.corpus = Corpus::Build(std::move(books), TokenizerConfig::Default());
  return f;
}

PipelineResources Resources(const Fixture &f) { return {&f.model, &f.lexicon, &f.vocabulary}; }

}  // namespace

TEST_CASE("disciplines are prepared separately with their own aspects") {
  Fixture f = MakeFixture();
  PipelineConfig config;
  auto runs = PrepareDisciplines(f.corpus, Resources(f), config);
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].discipline == "economics");
  CHECK(runs[1].discipline == "law");
  for (const auto &run : runs) {
    CHECK(run.aspects.partition == run.discipline);
    CHECK(run.aspects.aspects.size() <= 10);
    CHECK(run.factors.size() == run.books.size());
    for (const auto &book : run.books) {
      CHECK(book.discipline == run.discipline);
      CHECK(book.reviews.size() > 10);
    }
    CHECK(run.citations().size() == run.books.size());
  }
}

TEST_CASE("global aspects share one set") {
  Fixture f = MakeFixture();
  PipelineConfig config;
  config.global_aspects = true;
  config.top_n_aspects = 4;
  auto runs = PrepareDisciplines(f.corpus, Resources(f), config);
  CHECK(runs[0].aspects.words() == runs[1].aspects.words());
  CHECK(runs[0].aspects.aspects.size() == 4);
}

TEST_CASE("empty filtered corpus and tiny disciplines are rejected") {
  Fixture f = MakeFixture();
  PipelineConfig config;
  config.min_reviews = 1000;
  CHECK_THROWS_AS(PrepareDisciplines(f.corpus, Resources(f), config), Error);
  config.min_reviews = 10;
  CHECK_THROWS_AS(PrepareDisciplines(f.corpus, Resources(f), config, 1000), Error);
  CHECK_THROWS_AS(PrepareDisciplines(f.corpus, PipelineResources{}, config), Error);
}

TEST_CASE("scoring a discipline uses the combination's columns") {
  Fixture f = MakeFixture();
  auto runs = PrepareDisciplines(f.corpus, Resources(f), PipelineConfig{});
  for (const auto &spec : CombinationSpec::All()) {
    DisciplineScore score = ScoreDiscipline(runs[0], spec);
    CHECK(score.matrix.factor_names == FactorColumns(spec));
    CHECK(score.fusion.scores.book_ids.size() == runs[0].books.size());
  }
}

TEST_CASE("correlation report layout") {
  Fixture f = MakeFixture();
  PipelineConfig config;
  auto runs = PrepareDisciplines(f.corpus, Resources(f), config, 3);
  CorrelationReport report = BuildCorrelationReport(runs, AspectCategoryMap::Default(),
                                                    CorrelationMethod::kPearson);
  CHECK(report.disciplines == std::vector<std::string>{"economics", "law"});
  REQUIRE(report.rows.size() >= 6 + 4 + 5 + 3);
  CHECK(report.rows[0].section == "scores:review_holder");
  CHECK(report.rows[0].label == "macro");
  CHECK(report.rows[5].section == "scores:holder_and_evaluator");
  CHECK(report.rows[5].label == "macro_micro");
  CHECK(report.rows[6].section == "factors:review_holder");
  CHECK(report.rows[6].label == "star");
  CHECK(report.rows.back().section == "categories");
  for (const auto &row : report.rows) {
    if (row.section.rfind("scores:", 0) == 0) {
      for (const auto &d : report.disciplines) CHECK(row.cells.at(d).result.has_value());
    }
  }
}

TEST_CASE("serial and parallel pipelines agree") {
  Fixture f = MakeFixture();
  PipelineConfig serial;
  serial.execution = Execution::kSerial;
  PipelineConfig parallel;
  auto a = PrepareDisciplines(f.corpus, Resources(f), serial);
  for (int threads : {1, 3}) {
    SetThreadCount(threads);
    auto b = PrepareDisciplines(f.corpus, Resources(f), parallel);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].factors == b[i].factors);
  }
}
