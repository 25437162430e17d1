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


#ifndef BOOKIMPACT_PARALLEL_H_
#define BOOKIMPACT_PARALLEL_H_

namespace bookimpact {

// Selects between the OpenMP kernel and its serial reference. Both produce
// bit-identical results; the serial path exists for testing and comparison.
enum class Execution { kSerial, kParallel };

// Sets the OpenMP team size for subsequent parallel kernels. n <= 0 keeps
// the runtime default.
void SetThreadCount(int n);
int MaxThreads();

}  // namespace bookimpact

#endif  // BOOKIMPACT_PARALLEL_H_
