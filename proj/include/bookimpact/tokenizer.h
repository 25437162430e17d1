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


#ifndef BOOKIMPACT_TOKENIZER_H_
#define BOOKIMPACT_TOKENIZER_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace bookimpact {

enum class TokenizerMode { kWhitespace, kDictionary };

struct TokenizerConfig {
  TokenizerMode mode = TokenizerMode::kWhitespace;

  // ASCII case folding. Non-ASCII code points are left untouched.
  bool lowercase = true;

  // Code points stripped from the text and treated as token separators.
  // Members of the fixed terminator set {. ! ? ; 。 ！ ？ ；} that are also in
  // this set end a sentence.
  std::set<char32_t> punctuation;

  // Word list for dictionary mode. Entries are case-folded with the text.
  std::vector<std::string> dictionary;

  // Whitespace mode, lowercase, ASCII punctuation plus common CJK marks.
  static TokenizerConfig Default();

  bool operator==(const TokenizerConfig &other) const = default;
};

// Token sequence with the sentence index of each token.
struct TokenizedText {
  std::vector<std::string> tokens;
  std::vector<uint32_t> sentence_ids;
};

// Tokenizer bound to one configuration. Construction validates the config
// and indexes the dictionary; tokenizing is a const, thread-safe operation.
class Tokenizer {
 public:
  // Throws Error in dictionary mode with an empty dictionary.
  explicit Tokenizer(TokenizerConfig config);

  std::vector<std::string> Tokenize(std::string_view text) const;
  TokenizedText TokenizeWithSentences(std::string_view text) const;

  // Applies the configured case folding to a single word, as used for
  // lexicon and aspect-vocabulary entries.
  std::string Normalize(std::string_view word) const;

  const TokenizerConfig &config() const { return config_; }

 private:
  void SegmentRun(const std::u32string &run, uint32_t sentence,
                  TokenizedText *out) const;

  TokenizerConfig config_;
  std::unordered_set<std::u32string> dictionary_;
  size_t max_word_length_ = 0;
};

// Convenience wrapper constructing a Tokenizer for a single call.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig &config);

// Loads a dictionary file: UTF-8 plain text, one word per line. Blank lines
// are skipped.
std::vector<std::string> LoadDictionary(const std::string &path);

namespace utf8 {

// Decodes UTF-8; invalid sequences decode to U+FFFD.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);
void Append(char32_t cp, std::string *out);

}  // namespace utf8

}  // namespace bookimpact

#endif  // BOOKIMPACT_TOKENIZER_H_
