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


#include "bookimpact/corpus.h"

#include <algorithm>
#include <charconv>
#include <set>

#include <json.hpp>

#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact {
namespace {

using nlohmann::json;

std::string Where(const std::string &name, size_t line) {
  return name + ":" + std::to_string(line) + ": ";
}

// Reads a non-negative integer field, or appends a diagnostic.
bool ReadCount(const json &row, const char *key, int64_t *value,
               const std::string &where, std::vector<std::string> *errors) {
  auto it = row.find(key);
  if (it == row.end()) {
    errors->push_back(where + "missing key '" + key + "'");
    return false;
  }
  if (!it->is_number_integer()) {
    errors->push_back(where + "'" + key + "' must be an integer");
    return false;
  }
  *value = it->get<int64_t>();
  if (*value < 0) {
    errors->push_back(where + "'" + key + "' must be non-negative");
    return false;
  }
  return true;
}

bool ReadString(const json &row, const char *key, std::string *value,
                const std::string &where, std::vector<std::string> *errors) {
  auto it = row.find(key);
  if (it == row.end() || !it->is_string()) {
    errors->push_back(where + "'" + key + "' must be a string");
    return false;
  }
  *value = it->get<std::string>();
  return true;
}

void CheckReview(const Review &review) {
  if (review.star < 1 || review.star > 5) {
    throw Error("review " + review.review_id + ": star outside [1,5]");
  }
  if (review.helpful_yes < 0 || review.helpful_total < 0 ||
      review.helpful_yes > review.helpful_total) {
    throw Error("review " + review.review_id + ": invalid helpfulness votes");
  }
}

}  // namespace

Corpus Corpus::Build(std::vector<Book> books, TokenizerConfig config) {
  Corpus corpus;
  corpus.tokenizer_config = std::move(config);
  std::sort(books.begin(), books.end(),
            [](const Book &a, const Book &b) { return a.book_id < b.book_id; });
  std::set<std::string> review_ids;
  for (size_t i = 0; i < books.size(); ++i) {
    Book &book = books[i];
    if (i > 0 && books[i - 1].book_id == book.book_id) {
      throw Error("duplicate book_id " + book.book_id);
    }
    if (book.citation_count < 0) {
      throw Error("book " + book.book_id + ": negative citation count");
    }
    std::sort(book.reviews.begin(), book.reviews.end(),
              [](const Review &a, const Review &b) {
                return a.review_id < b.review_id;
              });
    for (const Review &review : book.reviews) {
      if (review.book_id != book.book_id) {
        throw Error("review " + review.review_id + " filed under wrong book");
      }
      if (!review_ids.insert(review.review_id).second) {
        throw Error("duplicate review_id " + review.review_id);
      }
      CheckReview(review);
    }
    corpus.discipline_index[book.discipline].push_back(book.book_id);
  }
  corpus.books = std::move(books);
  return corpus;
}

size_t Corpus::review_count() const {
  size_t n = 0;
  for (const Book &book : books) n += book.reviews.size();
  return n;
}

const Book *Corpus::Find(const std::string &book_id) const {
  auto it = std::lower_bound(
      books.begin(), books.end(), book_id,
      [](const Book &book, const std::string &id) { return book.book_id < id; });
  if (it == books.end() || it->book_id != book_id) return nullptr;
  return &*it;
}

Corpus ParseCorpus(const std::string &reviews_jsonl,
                   const std::string &books_csv, const TokenizerConfig &config,
                   const std::string &reviews_name,
                   const std::string &books_name) {
  Tokenizer tokenizer(config);
  std::vector<std::string> errors;

  // Books.
  std::vector<Book> books;
  std::map<std::string, size_t> book_index;
  auto rows = ParseCsv(books_csv);
  if (rows.empty()) {
    throw InputError({books_name + ": missing header"});
  }
  const std::vector<std::string> kColumns = {"book_id", "title", "discipline",
                                             "citation_count"};
  std::vector<int> column(kColumns.size(), -1);
  for (size_t c = 0; c < rows[0].size(); ++c) {
    for (size_t k = 0; k < kColumns.size(); ++k) {
      if (rows[0][c] == kColumns[k]) column[k] = static_cast<int>(c);
    }
  }
  for (size_t k = 0; k < kColumns.size(); ++k) {
    if (column[k] < 0) {
      throw InputError({Where(books_name, 1) + "header lacks column '" +
                        kColumns[k] + "'"});
    }
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    // Line numbers assume no embedded newlines, which holds for book rows.
    const std::string where = Where(books_name, r + 1);
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != rows[0].size()) {
      errors.push_back(where + "expected " + std::to_string(rows[0].size()) +
                       " fields, found " + std::to_string(row.size()));
      continue;
    }
    Book book;
    book.book_id = row[column[0]];
    book.title = row[column[1]];
    book.discipline = row[column[2]];
    const std::string &count = row[column[3]];
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(),
                                     book.citation_count);
    if (book.book_id.empty()) {
      errors.push_back(where + "empty book_id");
    } else if (ec != std::errc() || ptr != count.data() + count.size() ||
               count.empty() || book.citation_count < 0) {
      errors.push_back(where + "citation_count must be a non-negative integer");
    } else if (book_index.contains(book.book_id)) {
      errors.push_back(where + "duplicate book_id '" + book.book_id + "'");
    } else {
      book_index[book.book_id] = books.size();
      books.push_back(std::move(book));
    }
  }

  // Reviews.
  std::set<std::string> review_ids;
  for (const auto &[number, line] : SplitLines(reviews_jsonl)) {
    const std::string where = Where(reviews_name, number);
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error &e) {
      errors.push_back(where + "invalid JSON");
      continue;
    }
    if (!row.is_object()) {
      errors.push_back(where + "expected a JSON object");
      continue;
    }
    Review review;
    int64_t star = 0;
    bool ok = ReadString(row, "review_id", &review.review_id, where, &errors);
    ok = ReadString(row, "book_id", &review.book_id, where, &errors) && ok;
    ok = ReadString(row, "text", &review.text, where, &errors) && ok;
    ok = ReadCount(row, "star", &star, where, &errors) && ok;
    ok = ReadCount(row, "helpful_yes", &review.helpful_yes, where, &errors) && ok;
    ok = ReadCount(row, "helpful_total", &review.helpful_total, where,
                   &errors) && ok;
    if (!ok) continue;
    if (star < 1 || star > 5) {
      errors.push_back(where + "star " + std::to_string(star) +
                       " outside [1,5]");
      continue;
    }
    review.star = static_cast<int>(star);
    if (review.helpful_yes > review.helpful_total) {
      errors.push_back(where + "helpful_yes exceeds helpful_total");
      continue;
    }
    auto book = book_index.find(review.book_id);
    if (book == book_index.end()) {
      errors.push_back(where + "unknown book_id '" + review.book_id + "'");
      continue;
    }
    if (!review_ids.insert(review.review_id).second) {
      errors.push_back(where + "duplicate review_id '" + review.review_id + "'");
      continue;
    }
    TokenizedText tokens = tokenizer.TokenizeWithSentences(review.text);
    review.tokens = std::move(tokens.tokens);
    review.sentence_ids = std::move(tokens.sentence_ids);
    books[book->second].reviews.push_back(std::move(review));
  }

  if (!errors.empty()) throw InputError(std::move(errors));
  return Corpus::Build(std::move(books), config);
}

Corpus LoadCorpus(const std::string &reviews_path,
                  const std::string &books_path, const TokenizerConfig &config) {
  return ParseCorpus(ReadFile(reviews_path), ReadFile(books_path), config,
                     reviews_path, books_path);
}

std::string SerializeReviews(const Corpus &corpus) {
  std::string out;
  for (const Book &book : corpus.books) {
    for (const Review &review : book.reviews) {
      json row = {{"review_id", review.review_id},
                  {"book_id", review.book_id},
                  {"star", review.star},
                  {"text", review.text},
                  {"helpful_yes", review.helpful_yes},
                  {"helpful_total", review.helpful_total}};
      out += row.dump();
      out += '\n';
    }
  }
  return out;
}

std::string SerializeBooks(const Corpus &corpus) {
  std::string out = "book_id,title,discipline,citation_count\n";
  for (const Book &book : corpus.books) {
    out += CsvEscape(book.book_id) + "," + CsvEscape(book.title) + "," +
           CsvEscape(book.discipline) + "," +
           std::to_string(book.citation_count) + "\n";
  }
  return out;
}

void SaveCorpus(const Corpus &corpus, const std::string &reviews_path,
                const std::string &books_path) {
  AtomicFileSet files;
  files.Add(reviews_path, SerializeReviews(corpus));
  files.Add(books_path, SerializeBooks(corpus));
  files.Commit();
}

Corpus FilterBooks(const Corpus &corpus, int min_reviews) {
  if (min_reviews < 0) throw Error("min_reviews must be non-negative");
  std::vector<Book> kept;
  for (const Book &book : corpus.books) {
    if (book.reviews.size() > static_cast<size_t>(min_reviews)) {
      kept.push_back(book);
    }
  }
  return Corpus::Build(std::move(kept), corpus.tokenizer_config);
}

std::vector<Book> BooksInDiscipline(const Corpus &corpus,
                                    const std::string &discipline) {
  std::vector<Book> books;
  for (const Book &book : corpus.books) {
    if (book.discipline == discipline) books.push_back(book);
  }
  return books;
}

}  // namespace bookimpact
