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


#include "bookimpact/sentiment_macro.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "bookimpact/error.h"
#include "bookimpact/io.h"
#include "bookimpact/rng.h"

namespace bookimpact {
namespace {

using nlohmann::json;

constexpr const char *kModelFormat = "bookimpact-polarity-model";
constexpr int kModelVersion = 1;

std::map<std::string, int64_t> CountTerms(std::span<const std::string> doc) {
  std::map<std::string, int64_t> counts;
  for (const auto &token : doc) ++counts[token];
  return counts;
}

}  // namespace

int FeatureSpace::IndexOf(const std::string &word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : it->second;
}

void FeatureSpace::Reindex() {
  index_.clear();
  for (size_t i = 0; i < vocabulary.size(); ++i) {
    index_.emplace(vocabulary[i], static_cast<int>(i));
  }
}

double TfIdf(int64_t count, int64_t doc_length, int64_t n_docs,
             int64_t doc_frequency) {
  return (static_cast<double>(count) / static_cast<double>(doc_length)) *
         std::log(static_cast<double>(n_docs) /
                  static_cast<double>(doc_frequency));
}

FeatureSpace BuildFeatureSpace(std::span<const std::vector<std::string>> docs,
                               int top_k) {
  if (docs.empty()) throw Error("cannot build a feature space from no documents");
  if (top_k < 1) throw Error("top_k must be at least 1");

  std::vector<std::map<std::string, int64_t>> counts;
  counts.reserve(docs.size());
  std::map<std::string, int64_t> doc_frequency;
  for (const auto &doc : docs) {
    counts.push_back(CountTerms(doc));
    for (const auto &[word, n] : counts.back()) ++doc_frequency[word];
  }
  if (doc_frequency.empty()) throw Error("every document is empty");

  const auto n_docs = static_cast<int64_t>(docs.size());
  std::map<std::string, double> best;
  for (size_t d = 0; d < docs.size(); ++d) {
    const auto length = static_cast<int64_t>(docs[d].size());
    for (const auto &[word, n] : counts[d]) {
      double score = TfIdf(n, length, n_docs, doc_frequency[word]);
      auto [it, inserted] = best.emplace(word, score);
      if (!inserted) it->second = std::max(it->second, score);
    }
  }

  std::vector<std::pair<std::string, double>> ranked(best.begin(), best.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  ranked.resize(std::min(ranked.size(), static_cast<size_t>(top_k)));

  FeatureSpace space;
  space.n_docs = n_docs;
  for (const auto &[word, score] : ranked) {
    space.vocabulary.push_back(word);
    space.doc_frequency.push_back(doc_frequency[word]);
  }
  space.Reindex();
  return space;
}

FeatureVector Vectorize(std::span<const std::string> doc,
                        const FeatureSpace &space) {
  FeatureVector features;
  if (doc.empty()) return features;
  const auto length = static_cast<int64_t>(doc.size());
  for (const auto &[word, n] : CountTerms(doc)) {
    int index = space.IndexOf(word);
    if (index < 0) continue;
    features.emplace_back(index, TfIdf(n, length, space.n_docs,
                                       space.doc_frequency[index]));
  }
  std::sort(features.begin(), features.end());
  return features;
}

double PolarityModel::Score(const FeatureVector &features) const {
  double score = bias;
  for (const auto &[index, value] : features) score += weights[index] * value;
  return score;
}

double PolarityModel::Score(std::span<const std::string> doc) const {
  return Score(Vectorize(doc, space));
}

Polarity PolarityModel::Classify(std::span<const std::string> doc) const {
  return Score(doc) >= 0.0 ? Polarity::kPositive : Polarity::kNegative;
}

PolarityModel Train(std::span<const LabeledDoc> labeled, FeatureSpace space,
                    const TrainingParams &params) {
  if (labeled.empty()) throw Error("empty training set");
  bool has_positive = false;
  bool has_negative = false;
  for (const auto &doc : labeled) {
    (doc.label == Polarity::kPositive ? has_positive : has_negative) = true;
  }
  if (!has_positive || !has_negative) {
    throw Error("training set needs both positive and negative documents");
  }
  if (params.epochs < 1 || params.learning_rate <= 0.0 || params.l2 < 0.0) {
    throw Error("invalid training hyperparameters");
  }

  std::vector<FeatureVector> features;
  features.reserve(labeled.size());
  for (const auto &doc : labeled) features.push_back(Vectorize(doc.tokens, space));

  PolarityModel model;
  model.params = params;
  model.weights.assign(space.vocabulary.size(), 0.0);
  model.space = std::move(space);

  // Pegasos-style subgradient steps with a decaying rate
  // eta_t = lr / (1 + lr * l2 * t). The weight vector is kept as
  // scale * raw so the shrink step is O(1).
  std::vector<double> raw(model.weights.size(), 0.0);
  double scale = 1.0;
  std::vector<size_t> order(labeled.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(params.seed);
  int64_t t = 0;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    rng.Shuffle(std::span<size_t>(order));
    for (size_t i : order) {
      const double eta =
          params.learning_rate / (1.0 + params.learning_rate * params.l2 * t);
      ++t;
      const double y = ToInt(labeled[i].label);
      double margin = model.bias;
      for (const auto &[index, value] : features[i]) {
        margin += scale * raw[index] * value;
      }
      margin *= y;
      scale *= 1.0 - eta * params.l2;
      if (scale < 1e-9) {
        for (double &w : raw) w *= scale;
        scale = 1.0;
      }
      if (margin < 1.0) {
        for (const auto &[index, value] : features[i]) {
          raw[index] += eta * y * value / scale;
        }
        model.bias += eta * y;
      }
    }
  }
  for (size_t j = 0; j < raw.size(); ++j) model.weights[j] = scale * raw[j];
  return model;
}

PolarityModel TrainFromDocs(std::span<const LabeledDoc> labeled,
                            const TrainingParams &params) {
  if (labeled.empty()) throw Error("empty training set");
  std::vector<std::vector<std::string>> docs;
  docs.reserve(labeled.size());
  for (const auto &doc : labeled) docs.push_back(doc.tokens);
  return Train(labeled, BuildFeatureSpace(docs, params.top_k), params);
}

double Accuracy(const PolarityModel &model,
                std::span<const LabeledDoc> labeled) {
  if (labeled.empty()) return 0.0;
  size_t correct = 0;
  for (const auto &doc : labeled) {
    if (model.Classify(doc.tokens) == doc.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(labeled.size());
}

std::pair<std::vector<LabeledDoc>, std::vector<LabeledDoc>> SplitHoldout(
    std::span<const LabeledDoc> docs, double holdout_fraction, uint64_t seed) {
  if (holdout_fraction < 0.0 || holdout_fraction >= 1.0) {
    throw Error("holdout fraction must be in [0, 1)");
  }
  std::vector<size_t> order(docs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  rng.Shuffle(std::span<size_t>(order));
  const auto n_holdout = static_cast<size_t>(
      std::llround(holdout_fraction * static_cast<double>(docs.size())));
  std::pair<std::vector<LabeledDoc>, std::vector<LabeledDoc>> split;
  for (size_t k = 0; k < order.size(); ++k) {
    (k < order.size() - n_holdout ? split.first : split.second)
        .push_back(docs[order[k]]);
  }
  return split;
}

PolarityCounts CountPolarities(const Book &book, const PolarityModel &model) {
  if (book.reviews.empty()) {
    throw Error("book " + book.book_id + " has no reviews");
  }
  PolarityCounts counts;
  for (const Review &review : book.reviews) {
    if (model.Classify(review.tokens) == Polarity::kPositive) {
      ++counts.n_positive;
    } else {
      ++counts.n_negative;
    }
  }
  return counts;
}

std::vector<std::vector<Polarity>> ClassifyReviews(std::span<const Book> books,
                                                   const PolarityModel &model,
                                                   Execution execution) {
  std::vector<std::vector<Polarity>> out(books.size());
  for (size_t b = 0; b < books.size(); ++b) {
    out[b].resize(books[b].reviews.size());
  }
  // Flattened (book, review) index space for load balance.
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t b = 0; b < books.size(); ++b) {
    for (size_t r = 0; r < books[b].reviews.size(); ++r) slots.emplace_back(b, r);
  }
  const auto n = static_cast<int64_t>(slots.size());
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
      const auto [b, r] = slots[i];
      out[b][r] = model.Classify(books[b].reviews[r].tokens);
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      const auto [b, r] = slots[i];
      out[b][r] = model.Classify(books[b].reviews[r].tokens);
    }
  }
  return out;
}

std::vector<LabeledDoc> ParseTrainingJsonl(const std::string &contents,
                                           const Tokenizer &tokenizer,
                                           const std::string &name) {
  std::vector<LabeledDoc> docs;
  std::vector<std::string> errors;
  for (const auto &[number, line] : SplitLines(contents)) {
    const std::string where = name + ":" + std::to_string(number) + ": ";
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error &) {
      errors.push_back(where + "invalid JSON");
      continue;
    }
    if (!row.is_object() || !row.contains("text") || !row["text"].is_string()) {
      errors.push_back(where + "'text' must be a string");
      continue;
    }
    const json &label = row.contains("label") ? row["label"] : json();
    if (!label.is_number_integer() ||
        (label.get<int64_t>() != 1 && label.get<int64_t>() != -1)) {
      errors.push_back(where + "'label' must be +1 or -1");
      continue;
    }
    LabeledDoc doc;
    doc.tokens = tokenizer.Tokenize(row["text"].get<std::string>());
    doc.label = label.get<int64_t>() == 1 ? Polarity::kPositive : Polarity::kNegative;
    docs.push_back(std::move(doc));
  }
  if (!errors.empty()) throw InputError(std::move(errors));
  return docs;
}

std::vector<LabeledDoc> LoadTrainingFile(const std::string &path,
                                         const Tokenizer &tokenizer) {
  return ParseTrainingJsonl(ReadFile(path), tokenizer, path);
}

std::string SerializeModel(const PolarityModel &model) {
  json doc;
  doc["format"] = kModelFormat;
  doc["version"] = kModelVersion;
  doc["hyperparams"] = {{"epochs", model.params.epochs},
                        {"learning_rate", model.params.learning_rate},
                        {"l2", model.params.l2},
                        {"seed", model.params.seed},
                        {"top_k", model.params.top_k}};
  doc["n_docs"] = model.space.n_docs;
  doc["vocabulary"] = model.space.vocabulary;
  doc["doc_frequency"] = model.space.doc_frequency;
  doc["weights"] = model.weights;
  doc["bias"] = model.bias;
  return doc.dump(1) + "\n";
}

PolarityModel ParseModel(const std::string &contents) {
  try {
    json doc = json::parse(contents);
    if (doc.value("format", "") != kModelFormat) {
      throw Error("not a polarity model file");
    }
    if (doc.value("version", 0) != kModelVersion) {
      throw Error("unsupported model version");
    }
    PolarityModel model;
    const json &hp = doc.at("hyperparams");
    model.params.epochs = hp.at("epochs").get<int>();
    model.params.learning_rate = hp.at("learning_rate").get<double>();
    model.params.l2 = hp.at("l2").get<double>();
    model.params.seed = hp.at("seed").get<uint64_t>();
    model.params.top_k = hp.at("top_k").get<int>();
    model.space.n_docs = doc.at("n_docs").get<int64_t>();
    model.space.vocabulary = doc.at("vocabulary").get<std::vector<std::string>>();
    model.space.doc_frequency = doc.at("doc_frequency").get<std::vector<int64_t>>();
    model.weights = doc.at("weights").get<std::vector<double>>();
    model.bias = doc.at("bias").get<double>();
    if (model.space.doc_frequency.size() != model.space.vocabulary.size() ||
        model.weights.size() != model.space.vocabulary.size()) {
      throw Error("model arrays disagree in length");
    }
    model.space.Reindex();
    return model;
  } catch (const json::exception &e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
}

void SaveModel(const PolarityModel &model, const std::string &path) {
  WriteFileAtomic(path, SerializeModel(model));
}

PolarityModel LoadModel(const std::string &path) {
  return ParseModel(ReadFile(path));
}

}  // namespace bookimpact
