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


#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bookimpact/cli.h"
#include "bookimpact/error.h"
#include "bookimpact/io.h"
#include "bookimpact/version.h"

namespace bookimpact::cli {
namespace {

using nlohmann::json;

struct Resources {
  Corpus corpus;
  SentimentLexicon lexicon;
  AspectVocabulary vocabulary;
  PolarityModel model;
  std::string model_hash;
};

void Require(const std::string &value, const char *flag) {
  if (value.empty()) throw Error(std::string("missing required --") + flag);
}

std::string OutPath(const RunConfig &config, const std::string &name) {
  return (std::filesystem::path(config.out) / name).string();
}

// File-name-safe form of a discipline label.
std::string Slug(const std::string &label) {
  std::string out;
  for (unsigned char c : label) {
    out += std::isalnum(c) || c == '-' || c == '_' ? static_cast<char>(c) : '_';
  }
  return out.empty() ? "_" : out;
}

json Header(const RunConfig &config, const char *command) {
  json doc;
  doc["tool"] = "bookimpact";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["config_hash"] = ConfigHash(config);
  json cfg = ToJson(config);
  cfg.erase("out");
  cfg.erase("threads");
  doc["config"] = cfg;
  return doc;
}

json ResultJson(const CorrelationResult &r) {
  json doc = {{"r", r.r},
              {"n", r.n},
              {"p_two_tailed", r.p_two_tailed},
              {"sig_005", r.sig_005},
              {"sig_001", r.sig_001},
              {"stars", r.Stars()}};
  doc["t"] = std::isfinite(r.t) ? json(r.t) : json(nullptr);
  return doc;
}

std::string FormatR(double r) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", r);
  return buffer;
}

PolarityModel TrainModel(const RunConfig &config, const Tokenizer &tokenizer) {
  auto docs = LoadTrainingFile(config.training, tokenizer);
  return TrainFromDocs(docs, MakeTrainingParams(config));
}

Resources LoadResources(const RunConfig &config) {
  Require(config.reviews, "reviews");
  Require(config.books, "books");
  Require(config.lexicon, "lexicon");
  Require(config.aspects, "aspects");
  TokenizerConfig tokenizer_config = MakeTokenizerConfig(config);
  Tokenizer tokenizer(tokenizer_config);
  Resources res;
  res.corpus = LoadCorpus(config.reviews, config.books, tokenizer_config);
  res.lexicon = LoadLexicon(config.lexicon, tokenizer);
  res.vocabulary = LoadAspectVocabulary(config.aspects, tokenizer);
  if (!config.model.empty()) {
    res.model = LoadModel(config.model);
  } else if (!config.training.empty()) {
    res.model = TrainModel(config, tokenizer);
  } else {
    throw Error("either --model or --training is required");
  }
  res.model_hash = HexDigest(Fnv1a64(SerializeModel(res.model)));
  return res;
}

int CmdTrain(const RunConfig &config, std::ostream &out) {
  Require(config.training, "training");
  Tokenizer tokenizer(MakeTokenizerConfig(config));
  auto docs = LoadTrainingFile(config.training, tokenizer);
  auto [train, holdout] = SplitHoldout(docs, config.holdout, config.seed);
  PolarityModel model = TrainFromDocs(train, MakeTrainingParams(config));
  const std::string model_text = SerializeModel(model);

  json report = Header(config, "train");
  report["n_train"] = train.size();
  report["n_holdout"] = holdout.size();
  report["train_accuracy"] = Accuracy(model, train);
  report["holdout_accuracy"] = holdout.empty() ? json(nullptr) : json(Accuracy(model, holdout));
  report["vocabulary_size"] = model.space.vocabulary.size();
  report["model_hash"] = HexDigest(Fnv1a64(model_text));

  AtomicFileSet files;
  files.Add(OutPath(config, "model.json"), model_text);
  files.Add(OutPath(config, "train_report.json"), report.dump(2) + "\n");
  files.Commit();
  out << "trained on " << train.size() << " documents, vocabulary "
      << model.space.vocabulary.size() << "\n";
  if (!holdout.empty()) {
    out << "holdout accuracy: " << std::fixed << std::setprecision(4)
        << report["holdout_accuracy"].get<double>() << " (" << holdout.size()
        << " documents)\n";
  }
  out << "model: " << OutPath(config, "model.json") << "\n";
  return 0;
}

json FusionJson(const std::string &discipline, const FactorMatrix &matrix,
                const EntropyFusion &fusion) {
  json doc;
  doc["discipline"] = discipline;
  doc["n_books"] = matrix.rows();
  doc["factors"] = matrix.factor_names;
  json directions = json::array();
  for (Direction d : matrix.directions) {
    directions.push_back(d == Direction::kCost ? "cost" : "benefit");
  }
  doc["directions"] = directions;
  doc["entropies"] = fusion.weights.entropy;
  doc["weights"] = fusion.weights.weight;
  doc["uniform_fallback"] = fusion.weights.uniform_fallback;
  json degenerate = json::array();
  for (bool b : fusion.normalized.degenerate) degenerate.push_back(b);
  doc["degenerate"] = degenerate;
  return doc;
}

std::string ScoreRows(const ImpactScores &scores, const std::string &discipline) {
  std::string out;
  for (size_t i = 0; i < scores.book_ids.size(); ++i) {
    out += CsvEscape(scores.book_ids[i]) + "," + FormatDouble(scores.score[i]) +
           "," + std::to_string(scores.rank[i]) + "," + CsvEscape(discipline) + "\n";
  }
  return out;
}

int CmdScore(const RunConfig &config, std::ostream &out) {
  const std::string kScoresHeader = "book_id,score,rank,discipline\n";
  json report = Header(config, "score");
  AtomicFileSet files;

  if (!config.factors.empty()) {
    FactorMatrix matrix = ParseFactorMatrixCsv(ReadFile(config.factors), !config.no_direction);
    EntropyFusion fusion = FuseFactors(matrix);
    report["disciplines"] = json::array({FusionJson("factors", matrix, fusion)});
    files.Add(OutPath(config, "scores.csv"), kScoresHeader + ScoreRows(fusion.scores, "factors"));
    files.Add(OutPath(config, "score_report.json"), report.dump(2) + "\n");
    files.Commit();
    out << "scored " << matrix.rows() << " books from " << config.factors << "\n";
    return 0;
  }

  Resources res = LoadResources(config);
  PipelineConfig pipeline = MakePipelineConfig(config);
  auto runs = PrepareDisciplines(res.corpus, {&res.model, &res.lexicon, &res.vocabulary},
                                 pipeline);
  report["combination"] = pipeline.combination.ToString();
  report["model_hash"] = res.model_hash;
  report["disciplines"] = json::array();
  std::string scores_csv = kScoresHeader;
  std::string aspect_csv = "discipline,book_id,aspect,value,value_weighted\n";
  size_t n_books = 0;
  for (const auto &run : runs) {
    DisciplineScore score =
        ScoreDiscipline(run, pipeline.combination, pipeline.factor_options.use_directions);
    json entry = FusionJson(run.discipline, score.matrix, score.fusion);
    json aspects = json::array();
    for (const auto &[word, freq] : run.aspects.aspects) {
      aspects.push_back({{"aspect", word}, {"frequency", freq}});
    }
    entry["aspects"] = aspects;
    report["disciplines"].push_back(entry);
    scores_csv += ScoreRows(score.fusion.scores, run.discipline);
    files.Add(OutPath(config, "factors_" + Slug(run.discipline) + ".csv"),
              FactorMatrixToCsv(score.matrix));
    const auto words = run.aspects.words();
    for (size_t b = 0; b < run.books.size(); ++b) {
      for (size_t a = 0; a < words.size(); ++a) {
        aspect_csv += CsvEscape(run.discipline) + "," + CsvEscape(run.books[b].book_id) +
                      "," + CsvEscape(words[a]) + "," +
                      FormatDouble(run.factors[b].aspect_values[a]) + "," +
                      FormatDouble(run.factors[b].aspect_values_weighted[a]) + "\n";
      }
    }
    n_books += run.books.size();
  }
  files.Add(OutPath(config, "scores.csv"), scores_csv);
  if (config.per_aspect) files.Add(OutPath(config, "aspect_values.csv"), aspect_csv);
  files.Add(OutPath(config, "score_report.json"), report.dump(2) + "\n");
  files.Commit();
  out << "scored " << n_books << " books in " << runs.size()
      << " discipline(s) with " << pipeline.combination.ToString() << "\n";
  return 0;
}

json CorrelationReportJson(const CorrelationReport &report) {
  json rows = json::array();
  for (const auto &row : report.rows) {
    json cells = json::object();
    for (const auto &discipline : report.disciplines) {
      auto it = row.cells.find(discipline);
      if (it == row.cells.end()) continue;
      cells[discipline] = it->second.result ? ResultJson(*it->second.result)
                                            : json({{"error", it->second.error}});
    }
    rows.push_back({{"section", row.section}, {"label", row.label}, {"cells", cells}});
  }
  return rows;
}

std::string CorrelationCsv(const CorrelationReport &report) {
  std::string out = "section,row";
  for (const auto &d : report.disciplines) out += "," + CsvEscape(d);
  out += "\n";
  for (const auto &row : report.rows) {
    out += CsvEscape(row.section) + "," + CsvEscape(row.label);
    for (const auto &d : report.disciplines) {
      out += ",";
      auto it = row.cells.find(d);
      if (it != row.cells.end() && it->second.result) {
        out += FormatR(it->second.result->r) + it->second.result->Stars();
      }
    }
    out += "\n";
  }
  return out;
}

int CmdCorrelate(const RunConfig &config, std::ostream &out) {
  Resources res = LoadResources(config);
  PipelineConfig pipeline = MakePipelineConfig(config);
  AspectCategoryMap categories = config.category_map.empty()
                                     ? AspectCategoryMap::Default()
                                     : LoadCategoryMap(config.category_map);
  auto runs = PrepareDisciplines(res.corpus, {&res.model, &res.lexicon, &res.vocabulary},
                                 pipeline, 3);
  CorrelationReport report = BuildCorrelationReport(
      runs, categories, pipeline.method, pipeline.factor_options.use_directions);

  json doc = Header(config, "correlate");
  doc["model_hash"] = res.model_hash;
  doc["method"] = config.method;
  doc["disciplines"] = report.disciplines;
  json categories_json = json::object();
  for (const auto &[name, members] : categories.categories) categories_json[name] = members;
  categories_json["excluded"] = categories.excluded;
  doc["category_map"] = categories_json;
  doc["rows"] = CorrelationReportJson(report);
  doc["notes"] = {{"*", "significant at the 0.05 level (two-tailed)"},
                  {"**", "significant at the 0.01 level (two-tailed)"}};

  AtomicFileSet files;
  files.Add(OutPath(config, "correlations.json"), doc.dump(2) + "\n");
  files.Add(OutPath(config, "correlations.csv"), CorrelationCsv(report));
  files.Commit();
  out << "correlated " << report.rows.size() << " rows across "
      << report.disciplines.size() << " discipline(s)\n";
  return 0;
}

int CmdSynth(const RunConfig &config, std::ostream &out) {
  SynthSpec spec = MakeSynthSpec(config);
  SynthCorpus synth = Generate(spec, MakeTokenizerConfig(config));
  std::string quality = "book_id,latent_quality\n";
  for (size_t i = 0; i < synth.corpus.books.size(); ++i) {
    quality += synth.corpus.books[i].book_id + "," + FormatDouble(synth.latent_quality[i]) + "\n";
  }
  json report = Header(config, "synth");
  report["n_books"] = synth.corpus.books.size();
  report["n_reviews"] = synth.corpus.review_count();
  report["n_training_docs"] = synth.training_texts.size();

  AtomicFileSet files;
  files.Add(OutPath(config, "reviews.jsonl"), SerializeReviews(synth.corpus));
  files.Add(OutPath(config, "books.csv"), SerializeBooks(synth.corpus));
  files.Add(OutPath(config, "lexicon.tsv"), SerializeLexicon(synth.lexicon));
  files.Add(OutPath(config, "aspects.txt"), SerializeAspectVocabulary(synth.vocabulary));
  files.Add(OutPath(config, "training.jsonl"), SerializeTraining(synth));
  files.Add(OutPath(config, "categories.json"), CategoryMapToJson(AspectCategoryMap::Default()));
  files.Add(OutPath(config, "latent_quality.csv"), quality);
  files.Add(OutPath(config, "synth_report.json"), report.dump(2) + "\n");
  files.Commit();
  out << "wrote " << synth.corpus.books.size() << " books and "
      << synth.corpus.review_count() << " reviews to " << config.out << "\n";
  return 0;
}

std::string RenderTable(const std::vector<std::vector<std::string>> &rows) {
  std::vector<size_t> widths;
  for (const auto &row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto &row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::left << std::setw(static_cast<int>(widths[c]))
          << row[c];
    }
    out << "\n";
  }
  return out.str();
}

std::string RenderReport(const json &doc) {
  std::ostringstream out;
  out << "bookimpact " << doc.value("version", "?") << "  command: "
      << doc.value("command", "?") << "  config: " << doc.value("config_hash", "?")
      << "\n\n";
  if (doc.contains("rows")) {
    const auto disciplines = doc["disciplines"].get<std::vector<std::string>>();
    std::string section;
    std::vector<std::vector<std::string>> table;
    auto flush = [&] {
      if (table.empty()) return;
      out << section << "\n" << RenderTable(table) << "\n";
      table.clear();
    };
    for (const auto &row : doc["rows"]) {
      if (row["section"] != section) {
        flush();
        section = row["section"].get<std::string>();
        std::vector<std::string> header = {""};
        header.insert(header.end(), disciplines.begin(), disciplines.end());
        table.push_back(header);
      }
      std::vector<std::string> line = {row["label"].get<std::string>()};
      for (const auto &d : disciplines) {
        const json &cell = row["cells"].contains(d) ? row["cells"][d] : json();
        line.push_back(cell.contains("r")
                           ? FormatR(cell["r"].get<double>()) + cell["stars"].get<std::string>()
                           : "n/a");
      }
      table.push_back(line);
    }
    flush();
    out << "*  significant at the 0.05 level (two-tailed)\n"
        << "** significant at the 0.01 level (two-tailed)\n";
  } else if (doc.contains("disciplines")) {
    if (doc.contains("combination")) out << "combination: " << doc["combination"].get<std::string>() << "\n\n";
    for (const auto &entry : doc["disciplines"]) {
      out << entry["discipline"].get<std::string>() << " (" << entry["n_books"].get<size_t>()
          << " books)\n";
      std::vector<std::vector<std::string>> table = {{"factor", "direction", "entropy", "weight"}};
      for (size_t j = 0; j < entry["factors"].size(); ++j) {
        char e[32], w[32];
        std::snprintf(e, sizeof(e), "%.4f", entry["entropies"][j].get<double>());
        std::snprintf(w, sizeof(w), "%.4f", entry["weights"][j].get<double>());
        table.push_back({entry["factors"][j].get<std::string>(),
                         entry["directions"][j].get<std::string>(), e, w});
      }
      out << RenderTable(table) << "\n";
    }
  } else {
    out << doc.dump(2) << "\n";
  }
  return out.str();
}

int CmdReport(const RunConfig &config, bool write_file, std::ostream &out) {
  Require(config.input, "input");
  json doc;
  try {
    doc = json::parse(ReadFile(config.input));
  } catch (const json::exception &e) {
    throw Error("malformed report " + config.input + ": " + e.what());
  }
  const std::string text = RenderReport(doc);
  out << text;
  if (write_file) WriteFileAtomic(OutPath(config, "report.txt"), text);
  return 0;
}

// Merges a config file under the flags: keys whose flag was given on the
// command line keep the flag value.
RunConfig MergeConfigFile(const RunConfig &flags, const std::string &path,
                          const CLI::App &sub) {
  json merged = ToJson(flags);
  json file = LoadConfigFile(path);
  if (!file.is_object()) throw Error("config file must hold an object");
  for (const auto &[key, value] : file.items()) {
    if (!merged.contains(key)) throw Error("unknown config key '" + key + "'");
    size_t given = 0;
    try {
      given = sub.count("--" + key);
    } catch (const CLI::OptionNotFound &) {
    }
    if (given == 0) merged[key] = value;
  }
  return FromJson(merged);
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Book impact measurement from online review corpora", "bookimpact"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--config", config_path, "JSON or flat TOML file with RunConfig keys");
    sub->add_option("--out", config.out, "Output directory");
    sub->add_option("--threads", config.threads, "OpenMP threads (0 = runtime default)");
    sub->add_option("--tokenizer", config.tokenizer, "whitespace | dictionary");
    sub->add_option("--dictionary", config.dictionary, "Word list for dictionary mode");
    sub->add_flag("--no_lowercase", config.no_lowercase, "Disable ASCII case folding");
  };
  auto training = [&](CLI::App *sub) {
    sub->add_option("--training", config.training, "Labeled JSON Lines training file");
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--epochs", config.epochs, "Training epochs");
    sub->add_option("--learning_rate", config.learning_rate, "Initial step size");
    sub->add_option("--l2", config.l2, "L2 regularization strength");
    sub->add_option("--top_k", config.top_k, "Feature words kept by TF-IDF");
  };
  auto pipeline = [&](CLI::App *sub) {
    sub->add_option("--reviews", config.reviews, "Reviews JSON Lines file");
    sub->add_option("--books", config.books, "Books CSV file");
    sub->add_option("--lexicon", config.lexicon, "Sentiment lexicon TSV");
    sub->add_option("--aspects", config.aspects, "Aspect vocabulary, one noun per line");
    sub->add_option("--model", config.model, "Saved polarity model");
    sub->add_option("--combination", config.combination, "<part>/<level> factor combination")
        ->check([](const std::string &value) -> std::string {
          try {
            CombinationSpec::Parse(value);
            return "";
          } catch (const Error &e) {
            return e.what();
          }
        });
    sub->add_option("--min_reviews", config.min_reviews, "Keep books with more reviews than this");
    sub->add_option("--top_n", config.top_n, "Aspects per partition");
    sub->add_option("--scope", config.scope, "review | sentence")
        ->check(CLI::IsMember({"review", "sentence"}));
    sub->add_flag("--smoothing", config.smoothing, "Add-one helpfulness smoothing");
    sub->add_flag("--no_direction", config.no_direction, "Treat every factor as a benefit");
    sub->add_flag("--global_aspects", config.global_aspects, "One aspect set for all disciplines");
    common(sub);
    training(sub);
  };

  CLI::App *train = app.add_subcommand("train", "Train the review polarity classifier");
  common(train);
  training(train);
  train->add_option("--holdout", config.holdout, "Held-out fraction for accuracy");

  CLI::App *score = app.add_subcommand("score", "Compute entropy-weighted impact scores");
  pipeline(score);
  score->add_option("--factors", config.factors, "Score a factor CSV directly");
  score->add_flag("--per_aspect", config.per_aspect, "Also write per-aspect values");

  CLI::App *correlate = app.add_subcommand("correlate", "Correlate scores and factors with citations");
  pipeline(correlate);
  correlate->add_option("--category_map", config.category_map, "Aspect category JSON");
  correlate->add_option("--method", config.method, "pearson | spearman")
      ->check(CLI::IsMember({"pearson", "spearman"}));

  CLI::App *synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  common(synth);
  synth->add_option("--seed", config.seed, "Random seed");
  synth->add_option("--n_books", config.n_books, "Books to generate");
  synth->add_option("--reviews_min", config.reviews_min, "Fewest reviews per book");
  synth->add_option("--reviews_max", config.reviews_max, "Most reviews per book");
  synth->add_option("--quality_correlation", config.quality_correlation,
                    "corr(quality, citation driver)");
  synth->add_option("--lexicon_size", config.lexicon_size, "Sentiment words");
  synth->add_option("--aspect_count", config.aspect_count, "Aspect nouns");
  synth->add_option("--helpfulness_sparsity", config.helpfulness_sparsity,
                    "Share of reviews without votes");
  synth->add_option("--training_docs", config.training_docs, "Labeled training documents");
  synth->add_option("--discipline", config.discipline, "Discipline label");

  CLI::App *report = app.add_subcommand("report", "Render a JSON report as text tables");
  report->add_option("--input", config.input, "correlations.json or score_report.json");
  report->add_option("--config", config_path, "JSON or flat TOML file with RunConfig keys");
  report->add_option("--out", config.out, "Also write report.txt here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App *active = app.get_subcommands().front();
  try {
    if (!config_path.empty()) config = MergeConfigFile(config, config_path, *active);
    // Validate cross-field choices before doing work.
    CombinationSpec::Parse(config.combination);
    SetThreadCount(config.threads);
    if (active == train) return CmdTrain(config, out);
    if (active == score) return CmdScore(config, out);
    if (active == correlate) return CmdCorrelate(config, out);
    if (active == synth) return CmdSynth(config, out);
    return CmdReport(config, report->count("--out") > 0, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int RunCli(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace bookimpact::cli
