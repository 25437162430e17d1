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

#include <random>

#include "bookimpact/error.h"
#include "bookimpact/sentiment_micro.h"
#include "oracles/polarity_oracle.h"
#include "support/fixtures.h"

using namespace bookimpact;
using bookimpact::testing::ReviewFromTokens;

namespace {

SentimentLexicon SmallLexicon() {
  SentimentLexicon lexicon;
  for (const char *w : {"good", "great", "clear"}) lexicon.Add(w, 1);
  for (const char *w : {"bad", "poor", "vague"}) lexicon.Add(w, -1);
  return lexicon;
}

std::vector<std::string> Filler(size_t n) { return std::vector<std::string>(n, "x"); }

// Aspect at 0, then the given sentiment words at the given positions.
Review Placed(const std::string &aspect,
              std::vector<std::pair<std::string, size_t>> words, size_t length) {
  std::vector<std::string> tokens = Filler(length);
  tokens[0] = aspect;
  for (const auto &[w, pos] : words) tokens[pos] = w;
  return ReviewFromTokens(tokens);
}

std::map<std::string, int> OracleLexicon(const SentimentLexicon &lexicon) {
  return {lexicon.entries().begin(), lexicon.entries().end()};
}

}  // namespace

TEST_CASE("worked contribution examples") {
  std::vector<Contribution> nearer_positive = {{"good", 1, 5}, {"bad", -1, 10}};
  CHECK(PolarityFromContributions(nearer_positive) == 1);
  std::vector<Contribution> nearer_negative = {{"good", 1, 3}, {"bad", -1, 2}};
  CHECK(PolarityFromContributions(nearer_negative) == -1);
}

TEST_CASE("worked examples realized as token sequences") {
  auto lexicon = SmallLexicon();
  auto p = ComputeAspectPolarity(Placed("content", {{"good", 5}, {"bad", 10}}, 11),
                                 "content", lexicon);
  CHECK(p.sp == 1);
  CHECK(p.contributions == std::vector<Contribution>{{"good", 1, 5}, {"bad", -1, 10}});
  auto q = ComputeAspectPolarity(Placed("content", {{"good", 3}, {"bad", 2}}, 4),
                                 "content", lexicon);
  CHECK(q.sp == -1);
}

TEST_CASE("exact ties give zero") {
  std::vector<Contribution> even = {{"good", 1, 2}, {"bad", -1, 2}};
  CHECK(PolarityFromContributions(even) == 0);
  // 1/3 + 1/6 - 1/2 is zero only in exact arithmetic.
  std::vector<Contribution> thirds = {{"good", 1, 3}, {"great", 1, 6}, {"bad", -1, 2}};
  CHECK(PolarityFromContributions(thirds) == 0);
  std::vector<Contribution> tenths = {{"a", 1, 10}, {"b", 1, 10}, {"c", 1, 10}, {"d", -1, 5},
                                      {"e", -1, 10}};
  CHECK(PolarityFromContributions(tenths) == 0);
  CHECK(PolarityFromContributions(std::vector<Contribution>{}) == 0);
}

TEST_CASE("no sentiment word or no aspect occurrence gives zero") {
  auto lexicon = SmallLexicon();
  CHECK(ComputeAspectPolarity(ReviewFromTokens({"content", "x", "y"}), "content", lexicon).sp == 0);
  auto p = ComputeAspectPolarity(ReviewFromTokens({"good", "x", "bad"}), "content", lexicon);
  CHECK(p.sp == 0);
  CHECK(p.contributions.empty());
  CHECK(ComputeAspectPolarity(ReviewFromTokens({}), "content", lexicon).sp == 0);
}

TEST_CASE("distance is to the nearest occurrence of the aspect") {
  auto lexicon = SmallLexicon();
  auto p = ComputeAspectPolarity(
      ReviewFromTokens({"price", "x", "x", "x", "bad", "price", "good", "x"}), "price", lexicon);
  CHECK(p.contributions == std::vector<Contribution>{{"bad", -1, 1}, {"good", 1, 1}});
  CHECK(p.sp == 0);
}

TEST_CASE("a sentiment word that is itself the aspect is skipped") {
  SentimentLexicon lexicon;
  lexicon.Add("quality", 1);
  lexicon.Add("bad", -1);
  auto p = ComputeAspectPolarity(ReviewFromTokens({"quality", "x", "bad"}), "quality", lexicon);
  CHECK(p.contributions == std::vector<Contribution>{{"bad", -1, 2}});
  CHECK(p.sp == -1);
}

TEST_CASE("sentence scope ignores occurrences in other sentences") {
  auto lexicon = SmallLexicon();
  Review r = testing::MakeReview("R", "B", "The price is fine. Paper good but printing bad.");
  CHECK(ComputeAspectPolarity(r, "price", lexicon, Scope::kReview).sp == 1);
  auto p = ComputeAspectPolarity(r, "price", lexicon, Scope::kSentence);
  CHECK(p.sp == 0);
  CHECK(p.contributions.empty());
  CHECK(ComputeAspectPolarity(r, "printing", lexicon, Scope::kSentence).sp == -1);
}

TEST_CASE("sp depends only on the contribution multiset") {
  auto lexicon = SmallLexicon();
  auto a = ComputeAspectPolarity(Placed("content", {{"good", 4}, {"bad", 2}}, 6), "content", lexicon);
  // Same (value, distance) pairs, sentiment words now on the left.
  auto b = ComputeAspectPolarity(
      ReviewFromTokens({"good", "x", "bad", "x", "content", "x"}), "content", lexicon);
  CHECK(a.sp == b.sp);
  // Trailing sentiment-free tokens change nothing.
  Review longer = Placed("content", {{"good", 4}, {"bad", 2}}, 6);
  longer.tokens.insert(longer.tokens.end(), 20, "y");
  longer.sentence_ids.resize(longer.tokens.size(), 0);
  CHECK(ComputeAspectPolarity(longer, "content", lexicon).sp == a.sp);
}

TEST_CASE("polarity matches the brute-force oracle on random reviews") {
  std::mt19937_64 gen(11);
  const std::vector<std::string> words = {"content", "price", "good", "great", "clear",
                                          "bad", "poor", "vague", "x", "y"};
  auto lexicon = SmallLexicon();
  auto oracle_lexicon = OracleLexicon(lexicon);
  for (int trial = 0; trial < 2000; ++trial) {
    oracle::OracleReview o;
    const size_t n = gen() % 30;
    uint32_t sentence = 0;
    for (size_t i = 0; i < n; ++i) {
      o.tokens.push_back(words[gen() % words.size()]);
      if (gen() % 6 == 0) ++sentence;
      o.sentences.push_back(sentence);
    }
    Review review = ReviewFromTokens(o.tokens);
    review.sentence_ids = o.sentences;
    for (const char *aspect : {"content", "price"}) {
      for (Scope scope : {Scope::kReview, Scope::kSentence}) {
        const auto p = ComputeAspectPolarity(review, aspect, lexicon, scope);
        CHECK(p.sp == oracle::BruteForcePolarity(o, aspect, oracle_lexicon,
                                                 scope == Scope::kSentence));
        for (const auto &c : p.contributions) CHECK(c.distance >= 1);
      }
    }
  }
}

TEST_CASE("aspect value over a book") {
  auto pol = [](int sp) {
    AspectPolarity p;
    p.sp = sp;
    return p;
  };
  std::vector<AspectPolarity> ps = {pol(1), pol(1), pol(-1), pol(0)};
  CHECK(AspectValue(ps) == doctest::Approx(1.0 / 3.0));
  std::vector<double> h = {0.5, 1.0, 0.25, 0.9};
  CHECK(AspectValueWeighted(ps, h) == doctest::Approx((0.5 + 1.0 - 0.25) / 3.0));
  std::vector<double> ones(4, 1.0);
  CHECK(AspectValueWeighted(ps, ones) == AspectValue(ps));

  std::vector<AspectPolarity> zeros = {pol(0), pol(0)};
  std::vector<double> two = {1.0, 1.0};
  CHECK(AspectValue(zeros) == 0.0);
  CHECK(AspectValueWeighted(zeros, two) == 0.0);
  CHECK(AspectValue(std::vector<AspectPolarity>{}) == 0.0);
  CHECK_THROWS_AS(AspectValueWeighted(ps, two), Error);
}

TEST_CASE("lexicon rules") {
  SentimentLexicon lexicon;
  lexicon.Add("good", 1);
  lexicon.Add("good", 1);
  CHECK(lexicon.size() == 1);
  CHECK_THROWS_AS(lexicon.Add("good", -1), Error);
  CHECK_THROWS_AS(lexicon.Add("meh", 0), Error);
  CHECK(lexicon.Lookup("good") == 1);
  CHECK(lexicon.Lookup("other") == 0);
  CHECK(lexicon.Negated().Lookup("good") == -1);
}

TEST_CASE("lexicon file parsing") {
  Tokenizer tokenizer(TokenizerConfig::Default());
  auto lexicon = ParseLexicon("Good\t+1\nbad\t-1\nfine\t1\n", tokenizer);
  CHECK(lexicon.Lookup("good") == 1);
  CHECK(lexicon.Lookup("fine") == 1);
  CHECK(lexicon.Lookup("bad") == -1);
  try {
    ParseLexicon("good\t+1\ngood\t-1\nnotab\nmeh\t2\n", tokenizer, "lex");
    FAIL("expected rejection");
  } catch (const InputError &e) {
    CHECK(e.diagnostics().size() == 3);
    CHECK(e.diagnostics()[0].rfind("lex:2:", 0) == 0);
  }
  CHECK_THROWS_AS(ParseLexicon("\n\n", tokenizer), Error);
}

TEST_CASE("aspect vocabulary parsing normalizes and rejects empty input") {
  Tokenizer tokenizer(TokenizerConfig::Default());
  auto vocabulary = ParseAspectVocabulary("Content\nprice\n\n", tokenizer);
  CHECK(vocabulary.nouns == std::set<std::string>{"content", "price"});
  CHECK_THROWS_AS(ParseAspectVocabulary("", tokenizer), Error);
}

TEST_CASE("candidate extraction and top aspects") {
  AspectVocabulary vocabulary{{"content", "price", "paper", "ink"}};
  std::vector<Review> reviews = {
      ReviewFromTokens({"content", "price", "x", "content"}),
      ReviewFromTokens({"paper", "price", "content"}),
      ReviewFromTokens({"ink", "paper"})};
  auto freqs = ExtractCandidates(std::span<const Review>(reviews), vocabulary);
  CHECK(freqs == std::map<std::string, int64_t>{{"content", 3}, {"ink", 1}, {"paper", 2}, {"price", 2}});
  AspectSet top = TopAspects(freqs, 3, "all");
  CHECK(top.words() == std::vector<std::string>{"content", "paper", "price"});
  CHECK(top.partition == "all");
  CHECK(TopAspects(freqs).aspects.size() == 4);

  std::vector<Review> none = {ReviewFromTokens({"x"})};
  CHECK(ExtractCandidates(std::span<const Review>(none), vocabulary).empty());
  CHECK_THROWS_AS(TopAspects({}), Error);
  CHECK_THROWS_AS(ExtractCandidates(std::span<const Review>(reviews), AspectVocabulary{}), Error);
}

TEST_CASE("top aspects is capped at ten by default") {
  std::map<std::string, int64_t> freqs;
  for (int i = 0; i < 15; ++i) freqs["w" + std::to_string(10 + i)] = i % 4;
  AspectSet top = TopAspects(freqs);
  CHECK(top.aspects.size() == 10);
  for (size_t i = 1; i < top.aspects.size(); ++i) {
    const auto &a = top.aspects[i - 1];
    const auto &b = top.aspects[i];
    CHECK((a.second > b.second || (a.second == b.second && a.first < b.first)));
  }
}
