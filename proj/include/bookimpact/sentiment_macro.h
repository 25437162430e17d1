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


#ifndef BOOKIMPACT_SENTIMENT_MACRO_H_
#define BOOKIMPACT_SENTIMENT_MACRO_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bookimpact/corpus.h"
#include "bookimpact/parallel.h"

namespace bookimpact {

enum class Polarity : int { kNegative = -1, kPositive = 1 };

inline int ToInt(Polarity p) { return static_cast<int>(p); }

// Vocabulary selected by TF-IDF, with the document frequencies needed to
// weight new documents.
struct FeatureSpace {
  std::vector<std::string> vocabulary;
  std::vector<int64_t> doc_frequency;  // aligned to vocabulary
  int64_t n_docs = 0;

  // Index of `word` in the vocabulary, or -1.
  int IndexOf(const std::string &word) const;

  // Rebuilds the word -> index lookup. Called by the builders and loaders.
  void Reindex();

  bool operator==(const FeatureSpace &other) const {
    return vocabulary == other.vocabulary &&
           doc_frequency == other.doc_frequency && n_docs == other.n_docs;
  }

 private:
  std::unordered_map<std::string, int> index_;
};

// Sparse TF-IDF vector: (vocabulary index, weight) pairs, ascending index.
using FeatureVector = std::vector<std::pair<int, double>>;

// TF-IDF of a term: (count / doc_length) * ln(n_docs / doc_frequency).
double TfIdf(int64_t count, int64_t doc_length, int64_t n_docs,
             int64_t doc_frequency);

// Ranks every distinct word by its maximum TF-IDF over `docs` and keeps the
// top_k (ties broken lexicographically). Throws Error if docs is empty, if
// every document is empty, or if top_k < 1.
FeatureSpace BuildFeatureSpace(std::span<const std::vector<std::string>> docs,
                               int top_k);

// Out-of-vocabulary words are ignored; an empty doc yields an empty vector.
FeatureVector Vectorize(std::span<const std::string> doc,
                        const FeatureSpace &space);

struct LabeledDoc {
  std::vector<std::string> tokens;
  Polarity label = Polarity::kPositive;
};

struct TrainingParams {
  int epochs = 30;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  uint64_t seed = 42;
  int top_k = 2000;

  bool operator==(const TrainingParams &other) const = default;
};

// Linear max-margin classifier over a FeatureSpace.
struct PolarityModel {
  FeatureSpace space;
  std::vector<double> weights;  // aligned to space.vocabulary
  double bias = 0.0;
  TrainingParams params;

  double Score(std::span<const std::string> doc) const;
  double Score(const FeatureVector &features) const;

  // Sign of the decision score; an exact zero classifies as positive.
  Polarity Classify(std::span<const std::string> doc) const;

  bool operator==(const PolarityModel &other) const = default;
};

// Minimizes L2-regularized hinge loss by seeded stochastic subgradient
// descent over `space`. Single-threaded and deterministic given params.seed.
// Throws Error on an empty or single-class training set.
PolarityModel Train(std::span<const LabeledDoc> labeled, FeatureSpace space,
                    const TrainingParams &params);

// Builds the feature space from the training documents, then trains.
PolarityModel TrainFromDocs(std::span<const LabeledDoc> labeled,
                            const TrainingParams &params);

double Accuracy(const PolarityModel &model,
                std::span<const LabeledDoc> labeled);

// Deterministic shuffled split; the second part holds round(fraction * n)
// documents.
std::pair<std::vector<LabeledDoc>, std::vector<LabeledDoc>> SplitHoldout(
    std::span<const LabeledDoc> docs, double holdout_fraction, uint64_t seed);

struct PolarityCounts {
  int64_t n_positive = 0;
  int64_t n_negative = 0;

  bool operator==(const PolarityCounts &other) const = default;
};

// Throws Error if the book has no reviews.
PolarityCounts CountPolarities(const Book &book, const PolarityModel &model);

// Classifies every review of every book; result[i][j] is the polarity of
// books[i].reviews[j].
std::vector<std::vector<Polarity>> ClassifyReviews(
    std::span<const Book> books, const PolarityModel &model,
    Execution execution = Execution::kParallel);

// Labeled training file: JSON Lines with keys text and label (+1 / -1).
std::vector<LabeledDoc> LoadTrainingFile(const std::string &path,
                                         const Tokenizer &tokenizer);
std::vector<LabeledDoc> ParseTrainingJsonl(const std::string &contents,
                                           const Tokenizer &tokenizer,
                                           const std::string &name);

// Versioned JSON model file. Doubles are written in shortest round-trip
// form, so LoadModel(SaveModel(m)) == m bit for bit.
std::string SerializeModel(const PolarityModel &model);
PolarityModel ParseModel(const std::string &contents);
void SaveModel(const PolarityModel &model, const std::string &path);
PolarityModel LoadModel(const std::string &path);

}  // namespace bookimpact

#endif  // BOOKIMPACT_SENTIMENT_MACRO_H_
