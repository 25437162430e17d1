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


#ifndef BOOKIMPACT_SYNTHGEN_H_
#define BOOKIMPACT_SYNTHGEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "bookimpact/corpus.h"
#include "bookimpact/sentiment_macro.h"
#include "bookimpact/sentiment_micro.h"

namespace bookimpact {

struct SynthSpec {
  uint64_t seed = 1;
  int n_books = 40;
  int min_reviews = 30;
  int max_reviews = 120;
  double quality_correlation = 0.9;
  int lexicon_size = 60;  // split evenly between positive and negative
  int aspect_count = 10;
  double helpfulness_sparsity = 0.3;
  int training_docs = 600;
  std::string discipline = "synthetic";

  // Throws Error on an invalid spec.
  void Validate() const;
};

struct SynthCorpus {
  Corpus corpus;
  SentimentLexicon lexicon;
  AspectVocabulary vocabulary;
  std::vector<std::string> training_texts;
  std::vector<Polarity> training_labels;
  std::vector<LabeledDoc> training;
  std::vector<double> latent_quality;  // aligned to corpus.books
};

// Each book draws a latent quality q; stars, review wording, review counts
// and helpfulness votes all lean with q. Citations follow an exponential
// function of the rank of q', a noisy copy of q with corr(q, q') equal to
// quality_correlation. Deterministic given spec.seed.
SynthCorpus Generate(const SynthSpec &spec,
                     const TokenizerConfig &config = TokenizerConfig::Default());

// File contents in the formats read by the loaders.
std::string SerializeLexicon(const SentimentLexicon &lexicon);
std::string SerializeAspectVocabulary(const AspectVocabulary &vocabulary);
std::string SerializeTraining(const SynthCorpus &synth);

}  // namespace bookimpact

#endif  // BOOKIMPACT_SYNTHGEN_H_
