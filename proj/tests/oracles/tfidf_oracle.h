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


#ifndef BOOKIMPACT_TESTS_ORACLES_TFIDF_ORACLE_H_
#define BOOKIMPACT_TESTS_ORACLES_TFIDF_ORACLE_H_

// Direct term-frequency / inverse-document-frequency evaluation by counting,
// with no shared code from the library.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace bookimpact::oracle {

inline double TfIdfOf(const std::string &word, const std::vector<std::string> &doc,
                      const std::vector<std::vector<std::string>> &docs) {
  if (doc.empty()) return 0.0;
  const double count = static_cast<double>(std::count(doc.begin(), doc.end(), word));
  double containing = 0.0;
  for (const auto &d : docs) {
    if (std::find(d.begin(), d.end(), word) != d.end()) containing += 1.0;
  }
  if (count == 0.0 || containing == 0.0) return 0.0;
  return count / static_cast<double>(doc.size()) *
         std::log(static_cast<double>(docs.size()) / containing);
}

// Top-k words by max TF-IDF over docs, ties by word.
inline std::vector<std::string> Vocabulary(const std::vector<std::vector<std::string>> &docs,
                                           size_t top_k) {
  std::map<std::string, double> best;
  for (const auto &doc : docs) {
    for (const auto &w : doc) {
      const double v = TfIdfOf(w, doc, docs);
      auto it = best.find(w);
      if (it == best.end() || v > it->second) best[w] = v;
    }
  }
  std::vector<std::pair<std::string, double>> ranked(best.begin(), best.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::string> out;
  for (size_t i = 0; i < ranked.size() && i < top_k; ++i) out.push_back(ranked[i].first);
  return out;
}

}  // namespace bookimpact::oracle

#endif  // BOOKIMPACT_TESTS_ORACLES_TFIDF_ORACLE_H_
