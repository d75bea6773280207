// Copyright 2026 The lealc Authors
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


#include <benchmark/benchmark.h>

#include "lealc/extraction.hpp"
#include "lealc/fca.hpp"
#include "lealc/oracle.hpp"
#include "lealc/tableau.hpp"
#include "lealc_test_support.hpp"

using namespace lealc;

namespace {

void saturate_family(benchmark::State& state, testing::Family f) {
  const auto abox = testing::family_abox(f, static_cast<std::size_t>(state.range(0)));
  TableauOptions opt;
  opt.stop_on_clash = false;
  opt.record_trace = false;
  std::size_t steps = 0, terms = 0;
  for (auto _ : state) {
    Tableau t(abox, opt);
    t.saturate();
    steps = t.steps();
    terms = t.size();
    benchmark::DoNotOptimize(terms);
  }
  state.counters["size"] = static_cast<double>(abox_size(abox));
  state.counters["steps"] = static_cast<double>(steps);
  state.counters["terms"] = static_cast<double>(terms);
  state.counters["steps/bound"] = static_cast<double>(steps) / static_cast<double>(termination_bound(abox));
}

void BM_SaturateChain(benchmark::State& state) { saturate_family(state, testing::Family::Chain); }
void BM_SaturateLayered(benchmark::State& state) { saturate_family(state, testing::Family::Layered); }
void BM_SaturateMixed(benchmark::State& state) { saturate_family(state, testing::Family::Mixed); }

BENCHMARK(BM_SaturateChain)->RangeMultiplier(2)->Range(10, 320)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SaturateLayered)->RangeMultiplier(2)->Range(10, 320)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SaturateMixed)->RangeMultiplier(2)->Range(10, 320)->Unit(benchmark::kMicrosecond);

void BM_CheckAndExtract(benchmark::State& state) {
  const auto abox = testing::family_abox(testing::Family::Layered, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Verdict v = check_consistency(abox);
    benchmark::DoNotOptimize(v.model);
  }
}
BENCHMARK(BM_CheckAndExtract)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMicrosecond);

void BM_RandomAboxes(benchmark::State& state) {
  std::vector<std::pair<std::vector<AboxTerm>, Vocabulary>> inputs;
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const testing::Signature sig = testing::random_signature(rng, 2, 3);
    inputs.emplace_back(testing::random_abox(rng, sig, testing::AboxParams{}), sig.vocabulary());
  }
  for (auto _ : state)
    for (const auto& [abox, vocab] : inputs) benchmark::DoNotOptimize(check_consistency(abox, vocab).status);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_RandomAboxes)->Unit(benchmark::kMillisecond);

void BM_ConceptLattice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Rng rng(9);
  std::vector<std::string> objs(n), feats(n);
  Polarity p(objs, feats);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (testing::coin(rng, 0.5)) p.incidence.set(i, j);
  std::size_t count = 0;
  for (auto _ : state) count = concept_lattice(p).size();
  state.counters["concepts"] = static_cast<double>(count);
}
BENCHMARK(BM_ConceptLattice)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_OracleCatalog(benchmark::State& state) {
  const OracleBounds b{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0))};
  std::size_t n = 0;
  for (auto _ : state) n = ModelCatalog(b, {RoleName::box("R")}, {"A"}).size();
  state.counters["contexts"] = static_cast<double>(n);
}
BENCHMARK(BM_OracleCatalog)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
