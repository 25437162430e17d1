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


#include "bookimpact/sentiment_micro.h"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact {

void SentimentLexicon::Add(const std::string &word, int value) {
  if (value != 1 && value != -1) {
    throw Error("lexicon value for '" + word + "' must be +1 or -1");
  }
  auto [it, inserted] = entries_.emplace(word, value);
  if (!inserted && it->second != value) {
    throw Error("lexicon word '" + word + "' has both polarities");
  }
}

int SentimentLexicon::Lookup(const std::string &word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? 0 : it->second;
}

SentimentLexicon SentimentLexicon::Negated() const {
  SentimentLexicon out;
  for (const auto &[word, value] : entries_) out.entries_[word] = -value;
  return out;
}

SentimentLexicon ParseLexicon(const std::string &contents,
                              const Tokenizer &tokenizer,
                              const std::string &name) {
  SentimentLexicon lexicon;
  std::vector<std::string> errors;
  for (const auto &[number, line] : SplitLines(contents)) {
    const std::string where = name + ":" + std::to_string(number) + ": ";
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      errors.push_back(where + "expected word<TAB>+1|-1");
      continue;
    }
    std::string value = line.substr(tab + 1);
    int v = value == "+1" || value == "1" ? 1 : value == "-1" ? -1 : 0;
    if (v == 0) {
      errors.push_back(where + "value must be +1 or -1");
      continue;
    }
    try {
      lexicon.Add(tokenizer.Normalize(line.substr(0, tab)), v);
    } catch (const Error &e) {
      errors.push_back(where + e.what());
    }
  }
  if (!errors.empty()) throw InputError(std::move(errors));
  if (lexicon.empty()) throw Error(name + ": sentiment lexicon is empty");
  return lexicon;
}

SentimentLexicon LoadLexicon(const std::string &path,
                             const Tokenizer &tokenizer) {
  return ParseLexicon(ReadFile(path), tokenizer, path);
}

AspectVocabulary ParseAspectVocabulary(const std::string &contents,
                                       const Tokenizer &tokenizer) {
  AspectVocabulary vocabulary;
  for (const auto &[number, line] : SplitLines(contents)) {
    vocabulary.nouns.insert(tokenizer.Normalize(line));
  }
  if (vocabulary.nouns.empty()) throw Error("aspect vocabulary is empty");
  return vocabulary;
}

AspectVocabulary LoadAspectVocabulary(const std::string &path,
                                      const Tokenizer &tokenizer) {
  return ParseAspectVocabulary(ReadFile(path), tokenizer);
}

std::vector<std::string> AspectSet::words() const {
  std::vector<std::string> out;
  out.reserve(aspects.size());
  for (const auto &[word, freq] : aspects) out.push_back(word);
  return out;
}

std::map<std::string, int64_t> ExtractCandidates(
    std::span<const Review> reviews, const AspectVocabulary &vocabulary) {
  if (vocabulary.nouns.empty()) throw Error("aspect vocabulary is empty");
  if (reviews.empty()) throw Error("cannot extract aspects from no reviews");
  std::map<std::string, int64_t> freqs;
  for (const Review &review : reviews) {
    for (const auto &token : review.tokens) {
      if (vocabulary.nouns.contains(token)) ++freqs[token];
    }
  }
  return freqs;
}

std::map<std::string, int64_t> ExtractCandidates(
    std::span<const Book> books, const AspectVocabulary &vocabulary) {
  std::vector<Review> reviews;
  for (const Book &book : books) {
    reviews.insert(reviews.end(), book.reviews.begin(), book.reviews.end());
  }
  return ExtractCandidates(std::span<const Review>(reviews), vocabulary);
}

AspectSet TopAspects(const std::map<std::string, int64_t> &freqs, int n,
                     const std::string &partition) {
  if (freqs.empty()) throw Error("no candidate aspects");
  if (n < 1) throw Error("aspect count must be at least 1");
  AspectSet set;
  set.partition = partition;
  set.aspects.assign(freqs.begin(), freqs.end());
  std::stable_sort(set.aspects.begin(), set.aspects.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  set.aspects.resize(std::min(set.aspects.size(), static_cast<size_t>(n)));
  return set;
}

int PolarityFromContributions(std::span<const Contribution> contributions) {
  // Sum value/distance as an exact fraction so ties such as 1/3 + 1/6 - 1/2
  // land on zero. Falls back to floating point if the denominator outgrows
  // 128 bits, which needs very long reviews.
  using Wide = __int128;
  Wide num = 0;
  Wide den = 1;
  bool exact = true;
  for (const auto &c : contributions) {
    const Wide d = c.distance;
    Wide scaled, term, next_den;
    if (__builtin_mul_overflow(num, d, &scaled) ||
        __builtin_mul_overflow(static_cast<Wide>(c.value), den, &term) ||
        __builtin_add_overflow(scaled, term, &num) ||
        __builtin_mul_overflow(den, d, &next_den)) {
      exact = false;
      break;
    }
    den = next_den;
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
      Wide r = a % b;
      a = b;
      b = r;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  if (exact) return num > 0 ? 1 : num < 0 ? -1 : 0;
  long double sum = 0.0L;
  for (const auto &c : contributions) {
    sum += static_cast<long double>(c.value) / static_cast<long double>(c.distance);
  }
  return sum > 0.0L ? 1 : sum < 0.0L ? -1 : 0;
}

AspectPolarity ComputeAspectPolarity(const Review &review,
                                     const std::string &aspect,
                                     const SentimentLexicon &lexicon,
                                     Scope scope) {
  AspectPolarity out;
  out.review_id = review.review_id;
  out.aspect = aspect;

  std::vector<size_t> occurrences;
  for (size_t i = 0; i < review.tokens.size(); ++i) {
    if (review.tokens[i] == aspect) occurrences.push_back(i);
  }
  if (occurrences.empty()) return out;

  // Occurrences are ascending; a two-pointer sweep finds the nearest one.
  size_t next = 0;
  for (size_t k = 0; k < review.tokens.size(); ++k) {
    while (next < occurrences.size() && occurrences[next] < k) ++next;
    const int value = lexicon.Lookup(review.tokens[k]);
    if (value == 0) continue;
    int64_t best = std::numeric_limits<int64_t>::max();
    auto consider = [&](size_t pos) {
      if (scope == Scope::kSentence &&
          review.sentence_ids[pos] != review.sentence_ids[k]) {
        return;
      }
      best = std::min(best, std::abs(static_cast<int64_t>(pos) -
                                     static_cast<int64_t>(k)));
    };
    // Sentence ids never decrease along the review, so the nearest
    // same-sentence occurrence is one of the two neighbours of k.
    if (next < occurrences.size()) consider(occurrences[next]);
    if (next > 0) consider(occurrences[next - 1]);
    if (best == 0 || best == std::numeric_limits<int64_t>::max()) continue;
    out.contributions.push_back({review.tokens[k], value, best});
  }
  out.sp = PolarityFromContributions(out.contributions);
  return out;
}

double AspectValue(std::span<const AspectPolarity> polarities) {
  int64_t numerator = 0;
  int64_t denominator = 0;
  for (const auto &p : polarities) {
    numerator += p.sp;
    denominator += std::abs(p.sp);
  }
  if (denominator == 0) return 0.0;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double AspectValueWeighted(std::span<const AspectPolarity> polarities,
                           std::span<const double> helpfulness) {
  if (polarities.size() != helpfulness.size()) {
    throw Error("polarities and helpfulness scores differ in length");
  }
  double numerator = 0.0;
  int64_t denominator = 0;
  for (size_t j = 0; j < polarities.size(); ++j) {
    numerator += polarities[j].sp * helpfulness[j];
    denominator += std::abs(polarities[j].sp);
  }
  if (denominator == 0) return 0.0;
  return numerator / static_cast<double>(denominator);
}

}  // namespace bookimpact
