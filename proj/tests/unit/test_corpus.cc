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

#include <algorithm>

#include "bookimpact/corpus.h"
#include "bookimpact/error.h"
#include "bookimpact/io.h"
#include "support/fixtures.h"

using namespace bookimpact;
using bookimpact::testing::MakeBook;

namespace {

const char *kBooks =
    "book_id,title,discipline,citation_count\n"
    "B1,\"Capital, Volume 1\",economics,120\n"
    "B2,On Method,philosophy,7\n";

const char *kReviews =
    R"({"review_id":"R1","book_id":"B1","star":5,"text":"The content is deep.","helpful_yes":9,"helpful_total":10})"
    "\n"
    R"({"review_id":"R2","book_id":"B1","star":2,"text":"Paper quality is poor","helpful_yes":0,"helpful_total":0})"
    "\n\n"
    R"({"review_id":"R3","book_id":"B2","star":4,"text":"Clear translation","helpful_yes":1,"helpful_total":3})"
    "\n";

std::vector<std::string> Diagnostics(const std::string &reviews, const std::string &books = kBooks) {
  try {
    ParseCorpus(reviews, books, TokenizerConfig::Default());
  } catch (const InputError &e) {
    return e.diagnostics();
  }
  return {};
}

std::string Row(const std::string &fields) { return "{" + fields + "}\n"; }

}  // namespace

TEST_CASE("valid fixture loads two books and three reviews") {
  Corpus corpus = ParseCorpus(kReviews, kBooks, TokenizerConfig::Default());
  REQUIRE(corpus.books.size() == 2);
  CHECK(corpus.review_count() == 3);
  CHECK(corpus.books[0].title == "Capital, Volume 1");
  CHECK(corpus.books[0].citation_count == 120);
  CHECK(corpus.books[0].reviews[0].tokens ==
        std::vector<std::string>{"the", "content", "is", "deep"});
  CHECK(corpus.discipline_index.at("economics") == std::vector<std::string>{"B1"});
  CHECK(corpus.Find("B2") != nullptr);
  CHECK(corpus.Find("B9") == nullptr);
}

TEST_CASE("nine of ten helpful votes are preserved") {
  Corpus corpus = ParseCorpus(kReviews, kBooks, TokenizerConfig::Default());
  const Review &r = corpus.books[0].reviews[0];
  CHECK(r.helpful_yes == 9);
  CHECK(r.helpful_total == 10);
}

TEST_CASE("star outside [1,5] is rejected naming the row") {
  auto diag = Diagnostics(
      Row(R"("review_id":"R1","book_id":"B1","star":5,"text":"ok","helpful_yes":0,"helpful_total":0)") +
      Row(R"("review_id":"R2","book_id":"B1","star":6,"text":"ok","helpful_yes":0,"helpful_total":0)"));
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].find("reviews:2:") == 0);
  CHECK(diag[0].find("star 6") != std::string::npos);
  CHECK(Diagnostics(Row(R"("review_id":"R","book_id":"B1","star":0,"text":"","helpful_yes":0,"helpful_total":0)")).size() == 1);
}

TEST_CASE("more helpful votes than total votes is rejected") {
  auto diag = Diagnostics(
      Row(R"("review_id":"R1","book_id":"B1","star":3,"text":"x","helpful_yes":11,"helpful_total":10)"));
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].find("helpful_yes exceeds helpful_total") != std::string::npos);
}

TEST_CASE("unknown book ids are rejected") {
  auto diag = Diagnostics(
      Row(R"("review_id":"R1","book_id":"B7","star":3,"text":"x","helpful_yes":0,"helpful_total":0)"));
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].find("unknown book_id 'B7'") != std::string::npos);
}

TEST_CASE("every bad row is reported, not just the first") {
  auto diag = Diagnostics(
      Row(R"("review_id":"R1","book_id":"B1","star":9,"text":"x","helpful_yes":0,"helpful_total":0)") +
      "not json\n" +
      Row(R"("review_id":"R3","book_id":"B1","star":"5","text":"x","helpful_yes":0,"helpful_total":0)") +
      Row(R"("review_id":"R4","book_id":"B1","star":3,"helpful_yes":0,"helpful_total":0)") +
      Row(R"("review_id":"R5","book_id":"B1","star":3,"text":"x","helpful_yes":-1,"helpful_total":0)"));
  CHECK(diag.size() == 5);
}

TEST_CASE("duplicate ids are rejected") {
  const std::string row =
      Row(R"("review_id":"R1","book_id":"B1","star":3,"text":"x","helpful_yes":0,"helpful_total":0)");
  CHECK(Diagnostics(row + row).size() == 1);
  CHECK(Diagnostics(row, std::string(kBooks) + "B1,dup,economics,1\n").size() == 1);
}

TEST_CASE("book rows are validated") {
  const std::string row =
      Row(R"("review_id":"R1","book_id":"B1","star":3,"text":"x","helpful_yes":0,"helpful_total":0)");
  CHECK(Diagnostics(row, "book_id,title,discipline,citation_count\nB1,t,d,-4\n").size() == 2);
  CHECK(Diagnostics(row, "book_id,title,discipline\nB1,t,d\n").size() == 1);
  CHECK(Diagnostics(row, "").size() == 1);
}

TEST_CASE("missing files are errors") {
  CHECK_THROWS_AS(LoadCorpus("/nonexistent/reviews.jsonl", "/nonexistent/books.csv",
                             TokenizerConfig::Default()),
                  Error);
}

TEST_CASE("load, serialize, load gives an equal corpus") {
  Corpus first = ParseCorpus(kReviews, kBooks, TokenizerConfig::Default());
  Corpus second = ParseCorpus(SerializeReviews(first), SerializeBooks(first),
                              TokenizerConfig::Default());
  CHECK(first == second);

  testing::TempDir dir;
  SaveCorpus(first, dir / "r.jsonl", dir / "b.csv");
  CHECK(LoadCorpus(dir / "r.jsonl", dir / "b.csv", TokenizerConfig::Default()) == first);
}

TEST_CASE("helpfulness ratio stays in [0,1] for loaded reviews") {
  Corpus corpus = ParseCorpus(kReviews, kBooks, TokenizerConfig::Default());
  for (const auto &book : corpus.books) {
    for (const auto &r : book.reviews) {
      if (r.helpful_total > 0) {
        const double h = static_cast<double>(r.helpful_yes) / r.helpful_total;
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
      }
    }
  }
}

TEST_CASE("review filter keeps strictly more than the threshold") {
  Corpus corpus = Corpus::Build({MakeBook("A", 11), MakeBook("B", 10), MakeBook("C", 3)},
                                TokenizerConfig::Default());
  Corpus kept = FilterBooks(corpus, 10);
  REQUIRE(kept.books.size() == 1);
  CHECK(kept.books[0].book_id == "A");
  CHECK(kept.books[0].reviews == corpus.books[0].reviews);
  CHECK(FilterBooks(corpus, 0).books.size() == 3);
  CHECK_THROWS_AS(FilterBooks(corpus, -1), Error);
}

TEST_CASE("filter on an all-small corpus yields an empty corpus") {
  Corpus corpus = Corpus::Build({MakeBook("A", 10), MakeBook("B", 2)},
                                TokenizerConfig::Default());
  Corpus kept = FilterBooks(corpus, 10);
  CHECK(kept.books.empty());
  CHECK(kept.discipline_index.empty());
}

TEST_CASE("filter is idempotent") {
  std::vector<Book> books;
  for (int i = 0; i < 30; ++i) books.push_back(MakeBook("B" + std::to_string(100 + i), i % 15));
  Corpus corpus = Corpus::Build(books, TokenizerConfig::Default());
  for (int threshold : {0, 5, 10, 14}) {
    Corpus once = FilterBooks(corpus, threshold);
    CHECK(FilterBooks(once, threshold) == once);
  }
}

TEST_CASE("books are grouped by discipline in id order") {
  Corpus corpus = Corpus::Build(
      {MakeBook("Z", 1, "econ"), MakeBook("A", 1, "econ"), MakeBook("M", 1, "law")},
      TokenizerConfig::Default());
  auto econ = BooksInDiscipline(corpus, "econ");
  REQUIRE(econ.size() == 2);
  CHECK(econ[0].book_id == "A");
  CHECK(econ[1].book_id == "Z");
  CHECK(BooksInDiscipline(corpus, "none").empty());
}
