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


#ifndef BOOKIMPACT_CORPUS_H_
#define BOOKIMPACT_CORPUS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bookimpact/tokenizer.h"

namespace bookimpact {

struct Review {
  std::string review_id;
  std::string book_id;
  int star = 0;  // 1..5
  std::string text;
  std::vector<std::string> tokens;
  std::vector<uint32_t> sentence_ids;  // parallel to tokens
  int64_t helpful_yes = 0;
  int64_t helpful_total = 0;

  bool operator==(const Review &other) const = default;
};

struct Book {
  std::string book_id;
  std::string title;
  std::string discipline;
  int64_t citation_count = 0;
  std::vector<Review> reviews;  // ascending review_id

  bool operator==(const Book &other) const = default;
};

// Validated, tokenized collection of books. Books are kept in ascending
// book_id order and each book's reviews in ascending review_id order, so
// every reduction over the corpus has a fixed iteration order.
struct Corpus {
  std::vector<Book> books;
  std::map<std::string, std::vector<std::string>> discipline_index;
  TokenizerConfig tokenizer_config;

  // Sorts, checks invariants, and rebuilds the discipline index.
  static Corpus Build(std::vector<Book> books, TokenizerConfig config);

  size_t review_count() const;
  const Book *Find(const std::string &book_id) const;

  bool operator==(const Corpus &other) const = default;
};

// Reads the reviews JSON Lines file and the books CSV file, validates every
// row, and tokenizes review text. Throws InputError listing every rejected
// row, or Error when a file cannot be opened.
Corpus LoadCorpus(const std::string &reviews_path,
                  const std::string &books_path, const TokenizerConfig &config);

// Parses already-read file contents. `reviews_name` and `books_name` only
// label diagnostics.
Corpus ParseCorpus(const std::string &reviews_jsonl,
                   const std::string &books_csv, const TokenizerConfig &config,
                   const std::string &reviews_name = "reviews",
                   const std::string &books_name = "books");

std::string SerializeReviews(const Corpus &corpus);
std::string SerializeBooks(const Corpus &corpus);
void SaveCorpus(const Corpus &corpus, const std::string &reviews_path,
                const std::string &books_path);

// Keeps the books with strictly more than `min_reviews` reviews.
Corpus FilterBooks(const Corpus &corpus, int min_reviews = 10);

// Books of one discipline, ascending book_id.
std::vector<Book> BooksInDiscipline(const Corpus &corpus,
                                    const std::string &discipline);

}  // namespace bookimpact

#endif  // BOOKIMPACT_CORPUS_H_
