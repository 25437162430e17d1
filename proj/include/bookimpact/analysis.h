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


#ifndef BOOKIMPACT_ANALYSIS_H_
#define BOOKIMPACT_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bookimpact/factors.h"
#include "bookimpact/scoring.h"
#include "bookimpact/statistics.h"

namespace bookimpact {

using Citations = std::map<std::string, int64_t>;

// Aligns scores with citations by book_id (ascending) and correlates.
// Throws Error when the book sets differ or n < 3.
CorrelationResult CorrelateScores(
    const ImpactScores &scores, const Citations &citations,
    CorrelationMethod method = CorrelationMethod::kPearson);

// Result for one factor column. `result` is empty when the correlation is
// undefined, with the reason in `error`.
struct FactorCorrelation {
  std::string factor;
  std::optional<CorrelationResult> result;
  std::string error;
};

std::vector<FactorCorrelation> CorrelateFactors(
    const FactorMatrix &matrix, const Citations &citations,
    CorrelationMethod method = CorrelationMethod::kPearson);

// Grouping of aspects into content, publisher, and operator categories.
struct AspectCategoryMap {
  std::vector<std::pair<std::string, std::vector<std::string>>> categories;
  std::vector<std::string> excluded;

  // content_related {content, translation}; publisher_related {version,
  // price, paper, printing, appearance}; operator_related {packaging,
  // logistics}; excluded {quality}.
  static AspectCategoryMap Default();

  // Throws Error if categories overlap or an excluded word is categorized.
  void Validate() const;
};

// JSON {category: [aspects], ..., "excluded": [aspects]}.
AspectCategoryMap ParseCategoryMap(const std::string &json_text);
AspectCategoryMap LoadCategoryMap(const std::string &path);
std::string CategoryMapToJson(const AspectCategoryMap &map);

// values[b][a] is the value of aspects[a] for book b. Returns, per category
// in map order, the per-book mean over the category's members; members
// missing from `aspects` count as 0. Throws Error when a category has no
// member in `aspects`.
std::vector<std::vector<double>> GroupAspectValues(
    const std::vector<std::vector<double>> &values,
    std::span<const std::string> aspects, const AspectCategoryMap &map);

}  // namespace bookimpact

#endif  // BOOKIMPACT_ANALYSIS_H_
