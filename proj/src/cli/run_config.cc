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


#include <cctype>

#include "bookimpact/cli.h"
#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact::cli {

using nlohmann::json;

#define BOOKIMPACT_CONFIG_FIELDS(X)                                        \
  X(reviews) X(books) X(lexicon) X(aspects) X(training) X(model)           \
  X(category_map) X(factors) X(dictionary) X(input) X(combination)         \
  X(min_reviews) X(top_k) X(top_n) X(scope) X(smoothing) X(no_direction)   \
  X(global_aspects) X(per_aspect) X(method) X(tokenizer) X(no_lowercase)   \
  X(seed) X(epochs) X(learning_rate) X(l2) X(holdout) X(n_books)           \
  X(reviews_min) X(reviews_max) X(quality_correlation) X(lexicon_size)     \
  X(aspect_count) X(helpfulness_sparsity) X(training_docs) X(discipline)   \
  X(out) X(threads)

json ToJson(const RunConfig &config) {
  json doc = json::object();
#define X(name) doc[#name] = config.name;
  BOOKIMPACT_CONFIG_FIELDS(X)
#undef X
  return doc;
}

RunConfig FromJson(const json &doc) {
  if (!doc.is_object()) throw Error("config must be an object");
  RunConfig config;
  for (const auto &[key, value] : doc.items()) {
    bool known = false;
    try {
#define X(name)                                                  \
  if (key == #name) {                                            \
    config.name = value.get<decltype(config.name)>();            \
    known = true;                                                \
  }
      BOOKIMPACT_CONFIG_FIELDS(X)
#undef X
    } catch (const json::exception &) {
      throw Error("config key '" + key + "' has the wrong type");
    }
    if (!known) throw Error("unknown config key '" + key + "'");
  }
  return config;
}

#undef BOOKIMPACT_CONFIG_FIELDS

json ParseFlatToml(const std::string &text) {
  json doc = json::object();
  for (const auto &[number, raw] : SplitLines(text)) {
    const std::string where = "config line " + std::to_string(number) + ": ";
    std::string line = raw;
    // Strip comments outside strings.
    bool in_string = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '#' && !in_string) {
        line.resize(i);
        break;
      }
    }
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') throw Error(where + "tables are not supported");
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(where + "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw Error(where + "expected key = value");
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') throw Error(where + "unterminated string");
      doc[key] = json::parse(value);  // TOML basic strings share JSON escapes
    } else if (value == "true" || value == "false") {
      doc[key] = value == "true";
    } else {
      std::string digits;
      for (char c : value) {
        if (c != '_') digits += c;
      }
      try {
        doc[key] = json::parse(digits);
      } catch (const json::exception &) {
        throw Error(where + "cannot parse value '" + value + "'");
      }
      if (!doc[key].is_number()) throw Error(where + "cannot parse value '" + value + "'");
    }
  }
  return doc;
}

json LoadConfigFile(const std::string &path) {
  std::string text = ReadFile(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return json::parse(text);
    } catch (const json::exception &e) {
      throw Error("malformed config " + path + ": " + e.what());
    }
  }
  return ParseFlatToml(text);
}

std::string ConfigHash(const RunConfig &config) {
  json doc = ToJson(config);
  doc.erase("out");
  doc.erase("threads");
  return HexDigest(Fnv1a64(doc.dump()));
}

TokenizerConfig MakeTokenizerConfig(const RunConfig &config) {
  TokenizerConfig tokenizer = TokenizerConfig::Default();
  tokenizer.lowercase = !config.no_lowercase;
  if (config.tokenizer == "dictionary") {
    tokenizer.mode = TokenizerMode::kDictionary;
    if (config.dictionary.empty()) {
      throw Error("dictionary tokenizer requires --dictionary");
    }
    tokenizer.dictionary = LoadDictionary(config.dictionary);
  } else if (config.tokenizer != "whitespace") {
    throw Error("unknown tokenizer '" + config.tokenizer + "'");
  }
  return tokenizer;
}

PipelineConfig MakePipelineConfig(const RunConfig &config) {
  PipelineConfig pipeline;
  pipeline.combination = CombinationSpec::Parse(config.combination);
  pipeline.min_reviews = config.min_reviews;
  pipeline.top_n_aspects = config.top_n;
  pipeline.global_aspects = config.global_aspects;
  if (config.scope == "sentence") {
    pipeline.factor_options.scope = Scope::kSentence;
  } else if (config.scope != "review") {
    throw Error("unknown scope '" + config.scope + "'");
  }
  pipeline.factor_options.smoothing = config.smoothing;
  pipeline.factor_options.use_directions = !config.no_direction;
  if (config.method == "spearman") {
    pipeline.method = CorrelationMethod::kSpearman;
  } else if (config.method != "pearson") {
    throw Error("unknown correlation method '" + config.method + "'");
  }
  pipeline.execution = Execution::kParallel;
  return pipeline;
}

TrainingParams MakeTrainingParams(const RunConfig &config) {
  TrainingParams params;
  params.epochs = config.epochs;
  params.learning_rate = config.learning_rate;
  params.l2 = config.l2;
  params.seed = config.seed;
  params.top_k = config.top_k;
  return params;
}

SynthSpec MakeSynthSpec(const RunConfig &config) {
  SynthSpec spec;
  spec.seed = config.seed;
  spec.n_books = config.n_books;
  spec.min_reviews = config.reviews_min;
  spec.max_reviews = config.reviews_max;
  spec.quality_correlation = config.quality_correlation;
  spec.lexicon_size = config.lexicon_size;
  spec.aspect_count = config.aspect_count;
  spec.helpfulness_sparsity = config.helpfulness_sparsity;
  spec.training_docs = config.training_docs;
  spec.discipline = config.discipline;
  return spec;
}

}  // namespace bookimpact::cli
