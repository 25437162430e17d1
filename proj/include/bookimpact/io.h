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


#ifndef BOOKIMPACT_IO_H_
#define BOOKIMPACT_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookimpact {

// Whole-file read. Throws Error if the file cannot be opened.
std::string ReadFile(const std::string &path);

// Writes a group of files all-or-nothing: contents go to temporary files
// next to their targets and are renamed into place by Commit(). Temporaries
// left uncommitted are removed on destruction.
class AtomicFileSet {
 public:
  AtomicFileSet() = default;
  AtomicFileSet(const AtomicFileSet &) = delete;
  AtomicFileSet &operator=(const AtomicFileSet &) = delete;
  ~AtomicFileSet();

  void Add(std::string path, std::string contents);
  void Commit();

 private:
  std::vector<std::pair<std::string, std::string>> files_;
  std::vector<std::string> temporaries_;
  bool committed_ = false;
};

// Single-file convenience wrapper around AtomicFileSet.
void WriteFileAtomic(const std::string &path, const std::string &contents);

// Splits on '\n', dropping a trailing '\r' from each line and skipping
// blank lines. Pairs are (1-based line number, line).
std::vector<std::pair<size_t, std::string>> SplitLines(std::string_view text);

// RFC 4180 CSV. Fields may be quoted; quoted fields may hold commas, quotes
// ("") and newlines.
std::vector<std::vector<std::string>> ParseCsv(std::string_view text);
std::string CsvEscape(std::string_view field);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

// 64-bit FNV-1a.
uint64_t Fnv1a64(std::string_view data);
std::string HexDigest(uint64_t hash);

}  // namespace bookimpact

#endif  // BOOKIMPACT_IO_H_
