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


#include "bookimpact/analysis.h"

#include <set>

#include <json.hpp>

#include "bookimpact/error.h"
#include "bookimpact/io.h"

namespace bookimpact {
namespace {

using nlohmann::json;

std::vector<double> AlignCitations(const std::vector<std::string> &book_ids,
                                   const Citations &citations) {
  if (book_ids.size() != citations.size()) {
    throw Error("scored books and cited books differ");
  }
  std::vector<double> out;
  out.reserve(book_ids.size());
  for (const auto &id : book_ids) {
    auto it = citations.find(id);
    if (it == citations.end()) throw Error("no citation count for book " + id);
    out.push_back(static_cast<double>(it->second));
  }
  return out;
}

// Index order that visits book_ids ascending.
std::vector<size_t> AscendingOrder(const std::vector<std::string> &book_ids) {
  std::vector<size_t> order(book_ids.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return book_ids[a] < book_ids[b]; });
  return order;
}

}  // namespace

CorrelationResult CorrelateScores(const ImpactScores &scores,
                                  const Citations &citations,
                                  CorrelationMethod method) {
  const auto order = AscendingOrder(scores.book_ids);
  std::vector<std::string> ids;
  std::vector<double> x;
  for (size_t i : order) {
    ids.push_back(scores.book_ids[i]);
    x.push_back(scores.score[i]);
  }
  const auto y = AlignCitations(ids, citations);
  return Correlate(x, y, method);
}

std::vector<FactorCorrelation> CorrelateFactors(const FactorMatrix &matrix,
                                                const Citations &citations,
                                                CorrelationMethod method) {
  const auto order = AscendingOrder(matrix.book_ids);
  std::vector<std::string> ids;
  for (size_t i : order) ids.push_back(matrix.book_ids[i]);
  const auto y = AlignCitations(ids, citations);
  std::vector<FactorCorrelation> out(matrix.cols());
#pragma omp parallel for schedule(static)
  for (int64_t j = 0; j < static_cast<int64_t>(matrix.cols()); ++j) {
    FactorCorrelation &cell = out[j];
    cell.factor = matrix.factor_names[j];
    std::vector<double> x;
    x.reserve(order.size());
    for (size_t i : order) x.push_back(matrix.at(i, j));
    try {
      cell.result = Correlate(x, y, method);
    } catch (const Error &e) {
      cell.error = e.what();
    }
  }
  return out;
}

AspectCategoryMap AspectCategoryMap::Default() {
  AspectCategoryMap map;
  map.categories = {
      {"content_related", {"content", "translation"}},
      {"publisher_related", {"version", "price", "paper", "printing", "appearance"}},
      {"operator_related", {"packaging", "logistics"}},
  };
  map.excluded = {"quality"};
  return map;
}

void AspectCategoryMap::Validate() const {
  std::set<std::string> seen;
  for (const auto &[category, members] : categories) {
    for (const auto &word : members) {
      if (!seen.insert(word).second) {
        throw Error("aspect '" + word + "' appears in more than one category");
      }
    }
  }
  for (const auto &word : excluded) {
    if (seen.contains(word)) {
      throw Error("excluded aspect '" + word + "' is also categorized");
    }
  }
}

AspectCategoryMap ParseCategoryMap(const std::string &json_text) {
  AspectCategoryMap map;
  try {
    // ordered_json keeps the file's category order.
    auto doc = nlohmann::ordered_json::parse(json_text);
    if (!doc.is_object()) throw Error("category map must be a JSON object");
    for (const auto &[key, value] : doc.items()) {
      auto members = value.get<std::vector<std::string>>();
      if (key == "excluded") {
        map.excluded = std::move(members);
      } else {
        map.categories.emplace_back(key, std::move(members));
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("malformed category map: ") + e.what());
  }
  map.Validate();
  return map;
}

AspectCategoryMap LoadCategoryMap(const std::string &path) {
  return ParseCategoryMap(ReadFile(path));
}

std::string CategoryMapToJson(const AspectCategoryMap &map) {
  nlohmann::ordered_json doc;
  for (const auto &[category, members] : map.categories) doc[category] = members;
  doc["excluded"] = map.excluded;
  return doc.dump(2) + "\n";
}

std::vector<std::vector<double>> GroupAspectValues(
    const std::vector<std::vector<double>> &values,
    std::span<const std::string> aspects, const AspectCategoryMap &map) {
  std::vector<std::vector<double>> out;
  for (const auto &[category, members] : map.categories) {
    // Members are summed in lexicographic order so the result does not
    // depend on how the category or the aspect list is ordered.
    std::vector<std::string> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> columns;
    for (const auto &word : sorted) {
      auto it = std::find(aspects.begin(), aspects.end(), word);
      if (it != aspects.end()) columns.push_back(static_cast<int>(it - aspects.begin()));
    }
    if (columns.empty()) {
      throw Error("category '" + category + "' has no aspect in the aspect set");
    }
    std::vector<double> per_book(values.size(), 0.0);
    for (size_t b = 0; b < values.size(); ++b) {
      double sum = 0.0;
      for (int c : columns) sum += values[b][c];
      per_book[b] = sum / static_cast<double>(members.size());
    }
    out.push_back(std::move(per_book));
  }
  return out;
}

}  // namespace bookimpact
