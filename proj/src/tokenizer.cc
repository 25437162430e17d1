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


#include "bookimpact/tokenizer.h"

#include <algorithm>

#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact {
namespace utf8 {

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int length;
    char32_t cp;
    if (b0 < 0x80) {
      length = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      length = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      length = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      length = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool valid = i + length <= text.size();
    for (int k = 1; valid && k < length; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        valid = false;
      } else {
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    // Overlong forms, surrogates and out-of-range values are invalid.
    static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (valid && (cp < kMin[length] || cp > 0x10FFFF ||
                  (cp >= 0xD800 && cp <= 0xDFFF))) {
      valid = false;
    }
    if (!valid) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += length;
  }
  return out;
}

void Append(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) Append(cp, &out);
  return out;
}

}  // namespace utf8

namespace {

bool IsSpace(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool IsTerminator(char32_t c) {
  switch (c) {
    case U'.': case U'!': case U'?': case U';':
    case U'。': case U'！': case U'？': case U'；':
      return true;
    default:
      return false;
  }
}

char32_t FoldCase(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + (U'a' - U'A') : c;
}

}  // namespace

TokenizerConfig TokenizerConfig::Default() {
  TokenizerConfig config;
  for (char c : std::string_view("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")) {
    config.punctuation.insert(static_cast<char32_t>(c));
  }
  for (char32_t c : std::u32string_view(U"。！？；，、：“”‘’（）《》【】…—·")) {
    config.punctuation.insert(c);
  }
  return config;
}

Tokenizer::Tokenizer(TokenizerConfig config) : config_(std::move(config)) {
  if (config_.mode != TokenizerMode::kDictionary) return;
  for (const auto &word : config_.dictionary) {
    std::u32string decoded = utf8::Decode(word);
    if (config_.lowercase) {
      std::transform(decoded.begin(), decoded.end(), decoded.begin(), FoldCase);
    }
    if (decoded.empty()) continue;
    max_word_length_ = std::max(max_word_length_, decoded.size());
    dictionary_.insert(std::move(decoded));
  }
  if (dictionary_.empty()) {
    throw Error("dictionary tokenizer mode requires a non-empty dictionary");
  }
}

void Tokenizer::SegmentRun(const std::u32string &run, uint32_t sentence,
                           TokenizedText *out) const {
  if (run.empty()) return;
  if (config_.mode == TokenizerMode::kWhitespace) {
    out->tokens.push_back(utf8::Encode(run));
    out->sentence_ids.push_back(sentence);
    return;
  }
  // Greedy longest match, left to right.
  size_t pos = 0;
  while (pos < run.size()) {
    size_t length = std::min(max_word_length_, run.size() - pos);
    for (; length > 1; --length) {
      if (dictionary_.contains(run.substr(pos, length))) break;
    }
    out->tokens.push_back(utf8::Encode(std::u32string_view(run).substr(pos, length)));
    out->sentence_ids.push_back(sentence);
    pos += length;
  }
}

TokenizedText Tokenizer::TokenizeWithSentences(std::string_view text) const {
  TokenizedText out;
  std::u32string run;
  uint32_t sentence = 0;
  bool sentence_has_tokens = false;
  auto flush = [&] {
    if (!run.empty()) {
      SegmentRun(run, sentence, &out);
      run.clear();
      sentence_has_tokens = true;
    }
  };
  for (char32_t c : utf8::Decode(text)) {
    if (IsSpace(c)) {
      flush();
    } else if (config_.punctuation.contains(c)) {
      flush();
      if (IsTerminator(c) && sentence_has_tokens) {
        ++sentence;
        sentence_has_tokens = false;
      }
    } else {
      run.push_back(config_.lowercase ? FoldCase(c) : c);
    }
  }
  flush();
  return out;
}

std::vector<std::string> Tokenizer::Tokenize(std::string_view text) const {
  return TokenizeWithSentences(text).tokens;
}

std::string Tokenizer::Normalize(std::string_view word) const {
  if (!config_.lowercase) return std::string(word);
  std::string out(word);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig &config) {
  return Tokenizer(config).Tokenize(text);
}

std::vector<std::string> LoadDictionary(const std::string &path) {
  std::vector<std::string> words;
  for (auto &[number, line] : SplitLines(ReadFile(path))) {
    words.push_back(std::move(line));
  }
  return words;
}

}  // namespace bookimpact
