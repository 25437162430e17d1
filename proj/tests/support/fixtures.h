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


#ifndef BOOKIMPACT_TESTS_SUPPORT_FIXTURES_H_
#define BOOKIMPACT_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "bookimpact/corpus.h"
#include "bookimpact/sentiment_macro.h"
#include "bookimpact/tokenizer.h"

namespace bookimpact::testing {

inline Review MakeReview(const std::string &id, const std::string &book,
                         const std::string &text, int star = 3,
                         int64_t yes = 0, int64_t total = 0) {
  Review r;
  r.review_id = id;
  r.book_id = book;
  r.text = text;
  r.star = star;
  r.helpful_yes = yes;
  r.helpful_total = total;
  TokenizedText t = Tokenizer(TokenizerConfig::Default()).TokenizeWithSentences(text);
  r.tokens = std::move(t.tokens);
  r.sentence_ids = std::move(t.sentence_ids);
  return r;
}

// Review built straight from tokens, all in sentence 0.
inline Review ReviewFromTokens(std::vector<std::string> tokens) {
  Review r;
  r.review_id = "R";
  r.book_id = "B";
  r.star = 3;
  r.sentence_ids.assign(tokens.size(), 0);
  r.tokens = std::move(tokens);
  return r;
}

inline Book MakeBook(const std::string &id, int n_reviews,
                     const std::string &discipline = "d") {
  Book b;
  b.book_id = id;
  b.title = "Title " + id;
  b.discipline = discipline;
  for (int i = 0; i < n_reviews; ++i) {
    b.reviews.push_back(MakeReview(id + "-" + std::to_string(1000 + i), id,
                                   "a fine book", 4));
  }
  return b;
}

inline std::vector<std::string> Words(const std::string &text) {
  return Tokenize(text, TokenizerConfig::Default());
}

// Disjoint vocabularies, so the set is linearly separable.
inline std::vector<LabeledDoc> ToySeparableSet() {
  const std::vector<std::string> pos = {"great", "superb", "lovely", "clear", "rich"};
  const std::vector<std::string> neg = {"awful", "dull", "messy", "vague", "poor"};
  std::vector<LabeledDoc> docs;
  for (int i = 0; i < 10; ++i) {
    docs.push_back({{pos[i % 5], pos[(i + 2) % 5], "book"}, Polarity::kPositive});
    docs.push_back({{neg[i % 5], neg[(i + 3) % 5], "book"}, Polarity::kNegative});
  }
  return docs;
}

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 gen(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("bookimpact-test-" + std::to_string(gen()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;
  std::string operator/(const std::string &name) const { return (path_ / name).string(); }
  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace bookimpact::testing

#endif  // BOOKIMPACT_TESTS_SUPPORT_FIXTURES_H_
