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


#include "bookimpact/synthgen.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "bookimpact/error.h"
#include "bookimpact/rng.h"

namespace bookimpact {
namespace {

constexpr const char *kPositiveWords[] = {
    "excellent", "great",     "good",       "wonderful", "amazing",
    "insightful", "clear",    "brilliant",  "superb",    "helpful",
    "enjoyable", "fascinating", "solid",    "outstanding", "delightful",
    "accurate",  "thorough",  "elegant",    "rich",      "valuable",
    "classic",   "readable",  "inspiring",  "perfect",   "fine",
    "lovely",    "neat",      "sharp",      "fast",      "beautiful"};

constexpr const char *kNegativeWords[] = {
    "terrible",  "bad",       "poor",       "awful",     "boring",
    "confusing", "disappointing", "dull",   "sloppy",    "useless",
    "tedious",   "flawed",    "weak",       "shoddy",    "mediocre",
    "inaccurate", "expensive", "slow",      "damaged",   "ugly",
    "dreadful",  "horrible",  "broken",     "messy",     "cheap",
    "wrong",     "vague",     "clumsy",     "worst",     "faulty"};

// Listed in the order of the categories of high-frequency aspects, then
// extras for larger aspect counts.
constexpr const char *kAspectNouns[] = {
    "quality", "content", "version",  "printing", "translation",
    "paper",   "packaging", "logistics", "price",  "appearance",
    "cover",   "binding", "chapter",  "index",    "font",
    "delivery", "edition", "illustration", "service", "layout"};

// Nouns in the vocabulary that only occasionally appear in reviews.
constexpr const char *kDistractorNouns[] = {"shelf", "library", "gift", "desk"};

constexpr const char *kAdverbs[] = {"very", "really", "quite", "truly", "rather"};

// Lowercase letter suffix for generated words: 0 -> "a", 25 -> "z", 26 -> "ba".
std::string LetterCode(int k) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k > 0);
  return out;
}

std::vector<std::string> WordList(const char *const *base, size_t base_size,
                                  int n, const std::string &prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(static_cast<size_t>(i) < base_size
                      ? std::string(base[i])
                      : prefix + LetterCode(i - static_cast<int>(base_size)));
  }
  return out;
}

template <typename T>
const T &Pick(Rng &rng, const std::vector<T> &items) {
  return items[rng.UniformInt(items.size())];
}

// Index drawn with probability proportional to 1 / (k + 1).
size_t PickZipf(Rng &rng, const std::vector<double> &cumulative) {
  const double u = rng.Uniform() * cumulative.back();
  return std::upper_bound(cumulative.begin(), cumulative.end(), u) -
         cumulative.begin();
}

struct Vocab {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  std::vector<std::string> aspects;
  std::vector<double> aspect_cumulative;
};

std::string SentimentWord(Rng &rng, const Vocab &vocab, double p_positive) {
  return rng.Bernoulli(p_positive) ? Pick(rng, vocab.positive)
                                   : Pick(rng, vocab.negative);
}

std::string ReviewText(Rng &rng, const Vocab &vocab, double tone) {
  static const std::vector<std::string> adverbs(std::begin(kAdverbs), std::end(kAdverbs));
  static const std::vector<std::string> distractors(std::begin(kDistractorNouns),
                                                    std::end(kDistractorNouns));
  const double p_positive = 0.1 + 0.8 * tone;
  std::string text;
  const int sentences = 1 + static_cast<int>(rng.UniformInt(3));
  for (int s = 0; s < sentences; ++s) {
    const std::string &aspect = vocab.aspects[PickZipf(rng, vocab.aspect_cumulative)];
    const std::string word = SentimentWord(rng, vocab, p_positive);
    switch (rng.UniformInt(3)) {
      case 0:
        text += "The " + aspect + " of this book is " + Pick(rng, adverbs) + " " + word;
        break;
      case 1:
        text += "I found the " + aspect + " " + word;
        break;
      default:
        text += Pick(rng, adverbs) + " " + word + " " + aspect;
        break;
    }
    if (rng.Bernoulli(0.3)) {
      const std::string &other = vocab.aspects[PickZipf(rng, vocab.aspect_cumulative)];
      text += ", but the " + other + " was " + SentimentWord(rng, vocab, p_positive);
    }
    text += rng.Bernoulli(0.2) ? "! " : ". ";
  }
  if (rng.Bernoulli(0.5)) {
    text += "Overall a " + SentimentWord(rng, vocab, p_positive) + " read.";
  }
  if (rng.Bernoulli(0.05)) {
    text += " Bought it as a gift for the " + Pick(rng, distractors) + ".";
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

std::string TrainingText(Rng &rng, const Vocab &vocab, Polarity label) {
  static const std::vector<std::string> fillers = {"the", "this", "book", "is",
                                                   "was", "and", "it", "a"};
  const auto &words = label == Polarity::kPositive ? vocab.positive : vocab.negative;
  std::vector<std::string> tokens;
  const int n_sentiment = 2 + static_cast<int>(rng.UniformInt(3));
  for (int i = 0; i < n_sentiment; ++i) tokens.push_back(Pick(rng, words));
  const int n_filler = 2 + static_cast<int>(rng.UniformInt(5));
  for (int i = 0; i < n_filler; ++i) tokens.push_back(Pick(rng, fillers));
  if (rng.Bernoulli(0.7)) tokens.push_back(Pick(rng, vocab.aspects));
  rng.Shuffle(std::span<std::string>(tokens));
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += tokens[i];
  }
  return text + ".";
}

}  // namespace

void SynthSpec::Validate() const {
  if (n_books < 3) throw Error("synth spec: n_books must be at least 3");
  if (min_reviews < 1 || min_reviews > max_reviews) {
    throw Error("synth spec: need 1 <= min_reviews <= max_reviews");
  }
  if (!(quality_correlation >= 0.0 && quality_correlation <= 1.0)) {
    throw Error("synth spec: quality_correlation must be in [0, 1]");
  }
  if (!(helpfulness_sparsity >= 0.0 && helpfulness_sparsity <= 1.0)) {
    throw Error("synth spec: helpfulness_sparsity must be in [0, 1]");
  }
  if (lexicon_size < 2) throw Error("synth spec: lexicon_size must be at least 2");
  if (aspect_count < 1) throw Error("synth spec: aspect_count must be at least 1");
  if (training_docs < 2) throw Error("synth spec: training_docs must be at least 2");
  if (discipline.empty()) throw Error("synth spec: empty discipline label");
}

SynthCorpus Generate(const SynthSpec &spec, const TokenizerConfig &config) {
  spec.Validate();
  Tokenizer tokenizer(config);
  Rng rng(spec.seed);

  Vocab vocab;
  const int n_positive = (spec.lexicon_size + 1) / 2;
  const int n_negative = spec.lexicon_size / 2;
  vocab.positive = WordList(kPositiveWords, std::size(kPositiveWords), n_positive, "plus");
  vocab.negative = WordList(kNegativeWords, std::size(kNegativeWords), n_negative, "minus");
  vocab.aspects = WordList(kAspectNouns, std::size(kAspectNouns), spec.aspect_count, "aspect");
  // Aspect popularity follows 1 / (k + 1) over a per-seed order.
  rng.Shuffle(std::span<std::string>(vocab.aspects));
  double total = 0.0;
  for (size_t k = 0; k < vocab.aspects.size(); ++k) {
    total += 1.0 / static_cast<double>(k + 1);
    vocab.aspect_cumulative.push_back(total);
  }

  SynthCorpus out;
  for (const auto &w : vocab.positive) out.lexicon.Add(tokenizer.Normalize(w), 1);
  for (const auto &w : vocab.negative) out.lexicon.Add(tokenizer.Normalize(w), -1);
  for (const auto &w : vocab.aspects) out.vocabulary.nouns.insert(tokenizer.Normalize(w));
  for (const char *w : kDistractorNouns) out.vocabulary.nouns.insert(w);

  // Latent quality and its noisy citation-side copy, standardized so that
  // corr(q, q') equals quality_correlation.
  const int n = spec.n_books;
  const double rho = spec.quality_correlation;
  std::vector<double> quality(n);
  std::vector<double> shadow(n);
  for (int i = 0; i < n; ++i) {
    quality[i] = rng.Uniform();
    const double z = (quality[i] - 0.5) * std::sqrt(12.0);
    shadow[i] = rho * z + std::sqrt(1.0 - rho * rho) * rng.Normal();
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return shadow[a] < shadow[b]; });
  std::vector<int64_t> citations(n);
  for (int rank = 0; rank < n; ++rank) {
    const double x = static_cast<double>(rank) / static_cast<double>(n - 1);
    citations[order[rank]] = std::llround(2.0 * std::exp(3.0 * x));
  }

  std::vector<Book> books;
  for (int i = 0; i < n; ++i) {
    const double q = quality[i];
    char id[32];
    std::snprintf(id, sizeof(id), "B%05d", i + 1);
    Book book;
    book.book_id = id;
    book.title = "Synthetic Book " + std::to_string(i + 1);
    book.discipline = spec.discipline;
    book.citation_count = citations[i];

    const double popularity = std::clamp(0.6 * q + 0.4 * rng.Uniform(), 0.0, 1.0);
    const int n_reviews = spec.min_reviews +
        static_cast<int>(std::lround(popularity * (spec.max_reviews - spec.min_reviews)));
    for (int r = 0; r < n_reviews; ++r) {
      Review review;
      char rid[48];
      std::snprintf(rid, sizeof(rid), "%s-R%05d", id, r + 1);
      review.review_id = rid;
      review.book_id = book.book_id;
      const double tone = std::clamp(q + 0.15 * rng.Normal(), 0.0, 1.0);
      review.star = static_cast<int>(
          std::clamp(std::lround(1.0 + 4.0 * tone + 0.5 * rng.Normal()), 1L, 5L));
      review.text = ReviewText(rng, vocab, tone);
      if (rng.Bernoulli(1.0 - spec.helpfulness_sparsity)) {
        review.helpful_total = 1 + static_cast<int64_t>(rng.UniformInt(20));
        const double p_yes = 0.25 + 0.6 * q;
        for (int64_t v = 0; v < review.helpful_total; ++v) {
          if (rng.Bernoulli(p_yes)) ++review.helpful_yes;
        }
      }
      TokenizedText tokens = tokenizer.TokenizeWithSentences(review.text);
      review.tokens = std::move(tokens.tokens);
      review.sentence_ids = std::move(tokens.sentence_ids);
      book.reviews.push_back(std::move(review));
    }
    books.push_back(std::move(book));
  }
  out.corpus = Corpus::Build(std::move(books), config);
  out.latent_quality = std::move(quality);

  for (int d = 0; d < spec.training_docs; ++d) {
    const Polarity label = d % 2 == 0 ? Polarity::kPositive : Polarity::kNegative;
    out.training_texts.push_back(TrainingText(rng, vocab, label));
    out.training_labels.push_back(label);
    out.training.push_back({tokenizer.Tokenize(out.training_texts.back()), label});
  }
  return out;
}

std::string SerializeLexicon(const SentimentLexicon &lexicon) {
  std::string out;
  for (const auto &[word, value] : lexicon.entries()) {
    out += word + (value > 0 ? "\t+1\n" : "\t-1\n");
  }
  return out;
}

std::string SerializeAspectVocabulary(const AspectVocabulary &vocabulary) {
  std::string out;
  for (const auto &noun : vocabulary.nouns) out += noun + "\n";
  return out;
}

std::string SerializeTraining(const SynthCorpus &synth) {
  std::string out;
  for (size_t i = 0; i < synth.training_texts.size(); ++i) {
    nlohmann::json row = {{"text", synth.training_texts[i]},
                          {"label", ToInt(synth.training_labels[i])}};
    out += row.dump() + "\n";
  }
  return out;
}

}  // namespace bookimpact
