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


// Serial vs OpenMP paths of the two per-book kernels on a synthetic corpus.
// Usage: bench_kernels [--benchmark_filter=...]; thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <span>

#include "bookimpact/factors.h"
#include "bookimpact/sentiment_macro.h"
#include "bookimpact/sentiment_micro.h"
#include "bookimpact/synthgen.h"

namespace bookimpact {
namespace {

struct Fixture {
  SynthCorpus synth;
  PolarityModel model;
  AspectSet aspects;

  explicit Fixture(int n_books) {
    SynthSpec spec;
    spec.seed = 99;
    spec.n_books = n_books;
    synth = Generate(spec);
    model = TrainFromDocs(synth.training, TrainingParams{});
    aspects = TopAspects(
        ExtractCandidates(std::span<const Book>(synth.corpus.books), synth.vocabulary));
  }
};

const Fixture &Shared(int n_books) {
  static const Fixture small(100);
  static const Fixture large(800);
  return n_books <= 100 ? small : large;
}

void BM_ClassifyReviews(benchmark::State &state, Execution execution) {
  const Fixture &f = Shared(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = ClassifyReviews(f.synth.corpus.books, f.model, execution);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.synth.corpus.books.size()));
}

void BM_BookFactors(benchmark::State &state, Execution execution) {
  const Fixture &f = Shared(static_cast<int>(state.range(0)));
  FactorOptions options;
  options.scope = Scope::kSentence;
  for (auto _ : state) {
    auto out = ComputeAllBookFactors(f.synth.corpus.books, f.model, f.aspects, f.synth.lexicon,
                                     options, execution);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.synth.corpus.books.size()));
}

BENCHMARK_CAPTURE(BM_ClassifyReviews, serial, Execution::kSerial)->Arg(100)->Arg(800);
BENCHMARK_CAPTURE(BM_ClassifyReviews, parallel, Execution::kParallel)->Arg(100)->Arg(800);
BENCHMARK_CAPTURE(BM_BookFactors, serial, Execution::kSerial)->Arg(100)->Arg(800);
BENCHMARK_CAPTURE(BM_BookFactors, parallel, Execution::kParallel)->Arg(100)->Arg(800);

}  // namespace
}  // namespace bookimpact

BENCHMARK_MAIN();
