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


#ifndef BOOKIMPACT_SENTIMENT_MICRO_H_
#define BOOKIMPACT_SENTIMENT_MICRO_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bookimpact/corpus.h"
#include "bookimpact/tokenizer.h"

namespace bookimpact {

// Candidate-aspect universe: the nouns eligible to become aspects.
struct AspectVocabulary {
  std::set<std::string> nouns;
};

// Word -> +1 / -1.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  // Throws Error if a word is given both polarities or a value is not +/-1.
  void Add(const std::string &word, int value);

  // +1, -1, or 0 for words not in the lexicon.
  int Lookup(const std::string &word) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, int> &entries() const { return entries_; }

  // Copy with every value negated.
  SentimentLexicon Negated() const;

 private:
  std::map<std::string, int> entries_;
};

// TSV: word<TAB>+1|-1 per line. Words are normalized with `tokenizer`.
SentimentLexicon LoadLexicon(const std::string &path,
                             const Tokenizer &tokenizer);
SentimentLexicon ParseLexicon(const std::string &contents,
                              const Tokenizer &tokenizer,
                              const std::string &name = "lexicon");

// One noun per line, normalized with `tokenizer`.
AspectVocabulary LoadAspectVocabulary(const std::string &path,
                                      const Tokenizer &tokenizer);
AspectVocabulary ParseAspectVocabulary(const std::string &contents,
                                       const Tokenizer &tokenizer);

struct AspectSet {
  std::string partition;
  // Frequency descending, ties lexicographic.
  std::vector<std::pair<std::string, int64_t>> aspects;

  std::vector<std::string> words() const;
};

// Total occurrences of each vocabulary noun across the reviews. Nouns that
// never occur are absent from the result. Throws Error on an empty
// vocabulary or an empty review list.
std::map<std::string, int64_t> ExtractCandidates(
    std::span<const Review> reviews, const AspectVocabulary &vocabulary);
std::map<std::string, int64_t> ExtractCandidates(
    std::span<const Book> books, const AspectVocabulary &vocabulary);

// The n most frequent candidates. Throws Error if freqs is empty or n < 1.
AspectSet TopAspects(const std::map<std::string, int64_t> &freqs, int n = 10,
                     const std::string &partition = "");

enum class Scope { kReview, kSentence };

struct Contribution {
  std::string word;
  int value = 0;         // +1 / -1
  int64_t distance = 0;  // tokens to the nearest aspect occurrence, >= 1

  bool operator==(const Contribution &other) const = default;
};

struct AspectPolarity {
  std::string review_id;
  std::string aspect;
  int sp = 0;  // +1, 0, -1
  std::vector<Contribution> contributions;
};

// Sign of sum(value / distance); 0 for an exact zero or no contributions.
int PolarityFromContributions(std::span<const Contribution> contributions);

// Polarity of `aspect` within one review. Each lexicon word in scope
// contributes value / distance to the nearest occurrence of the aspect (in
// the same sentence under Scope::kSentence). Lexicon words that are
// themselves an aspect occurrence are skipped. sp = 0 when the aspect does
// not occur.
AspectPolarity ComputeAspectPolarity(const Review &review,
                                     const std::string &aspect,
                                     const SentimentLexicon &lexicon,
                                     Scope scope = Scope::kReview);

// sum(sp) / sum(|sp|), or 0 when every sp is 0.
double AspectValue(std::span<const AspectPolarity> polarities);

// sum(sp * h) / sum(|sp|), or 0 when every sp is 0. `helpfulness` is
// parallel to `polarities`.
double AspectValueWeighted(std::span<const AspectPolarity> polarities,
                           std::span<const double> helpfulness);

}  // namespace bookimpact

#endif  // BOOKIMPACT_SENTIMENT_MICRO_H_
