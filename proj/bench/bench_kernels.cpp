// Reference array BFS versus the bitset kernel, and the delta search with
// one thread versus all threads.

#include <benchmark/benchmark.h>

#include <numeric>

#include "conjdiam/delta.hpp"
#include "conjdiam/kernels.hpp"
#include "conjdiam/norm.hpp"

using namespace conjdiam;

namespace {

GroupSpec spec_for(int which) {
  switch (which) {
    case 0: return GroupSpec::semidihedral(6);
    case 1: return GroupSpec::modular(6, 2);
    case 2: return GroupSpec::modular(3, 5);
    default: return GroupSpec::modular(3, 7);
  }
}

// All unions of two class pairs, the bulk of every delta search.
std::vector<std::vector<std::uint32_t>> two_pair_unions(std::size_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j) out.push_back({i, j});
  return out;
}

void BM_ReferenceEvaluator(benchmark::State& state) {
  const Group g = build_group(spec_for(static_cast<int>(state.range(0))));
  const ClassPairs pairs = class_pairs(conjugacy_classes(g));
  const ReferenceEvaluator ref(g, pairs);
  const auto unions = two_pair_unions(pairs.count());
  for (auto _ : state)
    for (const auto& u : unions) benchmark::DoNotOptimize(ref.evaluate(u));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(unions.size()));
  state.SetLabel(spec_label(g.spec()));
}

void BM_BitsetKernel(benchmark::State& state) {
  const Group g = build_group(spec_for(static_cast<int>(state.range(0))));
  const ClassPairs pairs = class_pairs(conjugacy_classes(g));
  const BitsetKernel kernel(g, pairs);
  const auto unions = two_pair_unions(pairs.count());
  for (auto _ : state)
    for (const auto& u : unions) benchmark::DoNotOptimize(kernel.evaluate(u));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(unions.size()));
  state.SetLabel(spec_label(g.spec()));
}

void BM_DeltaSerialReference(benchmark::State& state) {
  const Group g = build_group(spec_for(static_cast<int>(state.range(0))));
  DeltaOptions opts;
  opts.reference = true;
  for (auto _ : state) benchmark::DoNotOptimize(delta(g, opts));
  state.SetLabel(spec_label(g.spec()));
}

void BM_DeltaParallel(benchmark::State& state) {
  const Group g = build_group(spec_for(static_cast<int>(state.range(0))));
  DeltaOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(delta(g, opts));
  state.SetLabel(spec_label(g.spec()) + " threads=" + std::to_string(opts.threads));
}

void BM_WordNorms(benchmark::State& state) {
  const Group g = build_group(spec_for(static_cast<int>(state.range(0))));
  const ConjClosedSet cs = conj_set(g, g.generators());
  for (auto _ : state) benchmark::DoNotOptimize(word_norms(g, cs));
  state.SetItemsProcessed(state.iterations() * g.order());
  state.SetLabel(spec_label(g.spec()));
}

}  // namespace

BENCHMARK(BM_ReferenceEvaluator)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BitsetKernel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaSerialReference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaParallel)->ArgsProduct({{0, 1, 2, 3}, {1, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordNorms)->DenseRange(0, 3);

BENCHMARK_MAIN();
