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


#ifndef BOOKIMPACT_CLI_H_
#define BOOKIMPACT_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bookimpact/pipeline.h"
#include "bookimpact/synthgen.h"

namespace bookimpact::cli {

// Every knob of every subcommand. Flag names and config-file keys are the
// field names.
struct RunConfig {
  // Inputs.
  std::string reviews;
  std::string books;
  std::string lexicon;
  std::string aspects;
  std::string training;
  std::string model;
  std::string category_map;
  std::string factors;
  std::string dictionary;
  std::string input;

  // Pipeline.
  std::string combination = "holder_and_evaluator/macro_micro";
  int min_reviews = 10;
  int top_k = 2000;
  int top_n = 10;
  std::string scope = "review";
  bool smoothing = false;
  bool no_direction = false;
  bool global_aspects = false;
  bool per_aspect = false;
  std::string method = "pearson";
  std::string tokenizer = "whitespace";
  bool no_lowercase = false;

  // Training.
  uint64_t seed = 42;
  int epochs = 30;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  double holdout = 0.2;

  // Synthetic corpus.
  int n_books = 40;
  int reviews_min = 30;
  int reviews_max = 120;
  double quality_correlation = 0.9;
  int lexicon_size = 60;
  int aspect_count = 10;
  double helpfulness_sparsity = 0.3;
  int training_docs = 600;
  std::string discipline = "synthetic";

  // Execution. Neither enters the config hash.
  std::string out = "out";
  int threads = 0;
};

nlohmann::json ToJson(const RunConfig &config);

// Throws Error on an unknown key or a value of the wrong type.
RunConfig FromJson(const nlohmann::json &json);

// Parses a flat TOML document (key = value lines, '#' comments; strings,
// integers, floats and booleans) into a JSON object.
nlohmann::json ParseFlatToml(const std::string &text);

// Reads a --config file: JSON when it starts with '{', flat TOML otherwise.
nlohmann::json LoadConfigFile(const std::string &path);

// FNV-1a over the canonical JSON of every field except out and threads.
std::string ConfigHash(const RunConfig &config);

TokenizerConfig MakeTokenizerConfig(const RunConfig &config);
PipelineConfig MakePipelineConfig(const RunConfig &config);
TrainingParams MakeTrainingParams(const RunConfig &config);
SynthSpec MakeSynthSpec(const RunConfig &config);

// Runs the command line. Returns 0 on success, 1 on a runtime failure and
// 2 on a usage error.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);
int RunCli(int argc, char **argv);

}  // namespace bookimpact::cli

#endif  // BOOKIMPACT_CLI_H_
