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
#include "bookimpact/statistics.h"
#include "bookimpact/synthgen.h"

using namespace bookimpact;

namespace {

SynthSpec Small(uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  spec.n_books = 12;
  spec.min_reviews = 5;
  spec.max_reviews = 20;
  spec.training_docs = 60;
  return spec;
}

}  // namespace

TEST_CASE("same seed gives byte-identical corpora") {
  SynthCorpus a = Generate(Small(4));
  SynthCorpus b = Generate(Small(4));
  CHECK(SerializeReviews(a.corpus) == SerializeReviews(b.corpus));
  CHECK(SerializeBooks(a.corpus) == SerializeBooks(b.corpus));
  CHECK(SerializeLexicon(a.lexicon) == SerializeLexicon(b.lexicon));
  CHECK(SerializeTraining(a) == SerializeTraining(b));
  CHECK(SerializeReviews(Generate(Small(5)).corpus) != SerializeReviews(a.corpus));
}

TEST_CASE("generated reviews respect the corpus invariants") {
  SynthCorpus synth = Generate(Small(6));
  CHECK(synth.corpus.books.size() == 12);
  CHECK(synth.latent_quality.size() == 12);
  for (const auto &book : synth.corpus.books) {
    CHECK(book.reviews.size() >= 5);
    CHECK(book.reviews.size() <= 20);
    CHECK(book.citation_count >= 0);
    for (const auto &r : book.reviews) {
      CHECK(r.star >= 1);
      CHECK(r.star <= 5);
      CHECK(r.helpful_yes <= r.helpful_total);
      bool has_aspect = false;
      for (const auto &t : r.tokens) has_aspect |= synth.vocabulary.nouns.contains(t);
      CHECK(has_aspect);
    }
  }
  CHECK(synth.lexicon.size() == 60);
}

TEST_CASE("training set is separable by construction") {
  SynthCorpus synth = Generate(Small(7));
  CHECK(synth.training.size() == 60);
  for (const auto &doc : synth.training) {
    bool positive = false;
    bool negative = false;
    for (const auto &t : doc.tokens) {
      positive |= synth.lexicon.Lookup(t) > 0;
      negative |= synth.lexicon.Lookup(t) < 0;
    }
    // Each document draws sentiment words from its own label's list only.
    CHECK(positive == (doc.label == Polarity::kPositive));
    CHECK(negative == (doc.label == Polarity::kNegative));
  }
  PolarityModel model = TrainFromDocs(synth.training, {});
  CHECK(Accuracy(model, synth.training) == 1.0);
}

TEST_CASE("without a planted link, quality and citations are uncorrelated") {
  SynthSpec spec = Small(8);
  spec.n_books = 200;
  spec.quality_correlation = 0.0;
  SynthCorpus synth = Generate(spec);
  std::vector<double> citations;
  for (const auto &b : synth.corpus.books) citations.push_back(static_cast<double>(b.citation_count));
  CHECK(std::abs(Pearson(synth.latent_quality, citations)) <= 0.25);
}

TEST_CASE("a strong planted link shows up in citations") {
  SynthSpec spec = Small(9);
  spec.n_books = 200;
  SynthCorpus synth = Generate(spec);
  std::vector<double> citations;
  for (const auto &b : synth.corpus.books) citations.push_back(static_cast<double>(b.citation_count));
  CHECK(Spearman(synth.latent_quality, citations) > 0.8);
}

TEST_CASE("lexicon and aspect sizes follow the spec") {
  SynthSpec spec = Small(10);
  spec.lexicon_size = 101;
  spec.aspect_count = 25;
  SynthCorpus synth = Generate(spec);
  CHECK(synth.lexicon.size() == 101);
  // Aspect nouns plus four distractors.
  CHECK(synth.vocabulary.nouns.size() == 29);
}

TEST_CASE("invalid specs are rejected") {
  auto bad = [](auto mutate) {
    SynthSpec spec;
    mutate(spec);
    return spec;
  };
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.n_books = 2; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.min_reviews = 50; s.max_reviews = 10; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.min_reviews = 0; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.quality_correlation = 1.5; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.helpfulness_sparsity = -0.1; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.lexicon_size = 1; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.aspect_count = 0; })), Error);
  CHECK_THROWS_AS(Generate(bad([](SynthSpec &s) { s.discipline = ""; })), Error);
}

TEST_CASE("emitted files parse back with the loaders") {
  SynthCorpus synth = Generate(Small(11));
  Tokenizer tokenizer(TokenizerConfig::Default());
  Corpus again = ParseCorpus(SerializeReviews(synth.corpus), SerializeBooks(synth.corpus),
                             TokenizerConfig::Default());
  CHECK(again == synth.corpus);
  CHECK(ParseLexicon(SerializeLexicon(synth.lexicon), tokenizer).entries() == synth.lexicon.entries());
  CHECK(ParseAspectVocabulary(SerializeAspectVocabulary(synth.vocabulary), tokenizer).nouns ==
        synth.vocabulary.nouns);
  auto docs = ParseTrainingJsonl(SerializeTraining(synth), tokenizer, "t");
  REQUIRE(docs.size() == synth.training.size());
  for (size_t i = 0; i < docs.size(); ++i) {
    CHECK(docs[i].tokens == synth.training[i].tokens);
    CHECK(docs[i].label == synth.training[i].label);
  }
}
