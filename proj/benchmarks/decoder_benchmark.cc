// Copyright 2026 The Seq2Tree Authors.
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

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "benchmark/benchmark.h"
#include "seq2tree/seq2tree.h"

namespace seq2tree {
namespace {

// Complete tree: `branching` children per node down to `depth`.
Taxonomy Balanced(int branching, int depth) {
  std::vector<Taxonomy::Edge> edges;
  std::vector<std::string> frontier = {"Root"};
  int next = 0;
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> deeper;
    for (const std::string& parent : frontier) {
      for (int b = 0; b < branching; ++b) {
        deeper.push_back("N" + std::to_string(next++));
        edges.push_back({parent, deeper.back()});
      }
    }
    frontier = std::move(deeper);
  }
  return std::get<Taxonomy>(Taxonomy::FromEdges(edges));
}

LabelSet SomePaths(const Taxonomy& tax, int paths, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LabelId> picks;
  for (int i = 0; i < paths; ++i) {
    picks.push_back(tax.preorder()[1 + rng() % (tax.size() - 1)]);
  }
  return AncestorClosure(tax, LabelSet(std::move(picks)));
}

void BM_DynamicVocabulary(benchmark::State& state) {
  const Taxonomy tax = Balanced(static_cast<int>(state.range(0)), 3);
  const LabelSequence seq = Linearize(tax, SomePaths(tax, 8, 1));
  std::vector<DecoderState> states;
  DecoderState s = DecoderState::Initial(tax);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    states.push_back(s);
    StepInPlace(tax, s, seq[i]);
  }
  for (auto _ : state) {
    for (const DecoderState& st : states) {
      benchmark::DoNotOptimize(DynamicVocabulary(tax, st));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(states.size()));
}
BENCHMARK(BM_DynamicVocabulary)->Arg(3)->Arg(6)->Arg(12);

void BM_ConstrainedBeamSearch(benchmark::State& state) {
  const Taxonomy tax = Balanced(6, 3);  // 259 nodes
  const RandomScorer scorer(7);
  const auto width = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConstrainedBeamSearch(tax, scorer, "doc", width));
  }
}
BENCHMARK(BM_ConstrainedBeamSearch)->Arg(1)->Arg(4)->Arg(16);

void BM_BigramGreedy(benchmark::State& state) {
  const Taxonomy tax = Balanced(6, 3);
  std::vector<LabelSet> corpus;
  for (int i = 0; i < 500; ++i) corpus.push_back(SomePaths(tax, 2, i));
  const BigramScorer bigram = BigramScorer::Fit(tax, corpus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyDecode(tax, bigram, ""));
  }
}
BENCHMARK(BM_BigramGreedy);

void BM_Evaluate(benchmark::State& state) {
  const Taxonomy tax = Balanced(6, 3);
  std::vector<LabelSet> gold, pred;
  for (int i = 0; i < state.range(0); ++i) {
    gold.push_back(SomePaths(tax, 3, 2 * i));
    pred.push_back(SomePaths(tax, 3, 2 * i + 1));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Evaluate(tax, gold, pred));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evaluate)->Arg(1000)->Arg(10000);

void BM_LinearizeRoundTrip(benchmark::State& state) {
  const Taxonomy tax = Balanced(6, 3);
  const LabelSet labels = SomePaths(tax, 20, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Delinearize(tax, Linearize(tax, labels)));
  }
}
BENCHMARK(BM_LinearizeRoundTrip);

}  // namespace
}  // namespace seq2tree

BENCHMARK_MAIN();
