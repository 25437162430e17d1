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


#ifndef BOOKIMPACT_ERROR_H_
#define BOOKIMPACT_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace bookimpact {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input file cannot be ingested. Carries one diagnostic per
// rejected row, formatted as "<file>:<line>: <message>".
class InputError : public Error {
 public:
  explicit InputError(std::vector<std::string> diagnostics);

  const std::vector<std::string> &diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

}  // namespace bookimpact

#endif  // BOOKIMPACT_ERROR_H_
