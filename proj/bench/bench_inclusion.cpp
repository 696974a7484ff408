// Serial reference against the OpenMP top-level loop on the generated families.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "fles/benchgen.hpp"
#include "fles/inclusion.hpp"
#include "fles/nfa.hpp"
#include "fles/reductions.hpp"

namespace {

using namespace fles;

template <typename Make>
void run_serial(benchmark::State& state, Make make) {
  const auto [a, b] = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_inclusion_serial(a, b).included);
}

template <typename Make>
void run_parallel(benchmark::State& state, Make make) {
  const auto [a, b] = make(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_inclusion(a, b, {{}, threads}).included);
  state.counters["threads"] = threads;
}

std::pair<StructurePtr, StructurePtr> ccnfs_pair(std::size_t n) { return {ccnfs(n), ccnfs(n)}; }

std::pair<StructurePtr, StructurePtr> sharing_pair(std::size_t n) { return {sharing(n, 20), sharing(n, 20)}; }

std::pair<StructurePtr, StructurePtr> mutant_pair(std::size_t n) {
  auto base = allpar(n);
  return {mutate(base, AddOrder{1, 2}), base};
}

std::pair<StructurePtr, StructurePtr> dhc_k5(std::size_t marked) {
  UGraph g{5, {}, {}};
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u + 1; v < 5; ++v) g.edges.emplace_back(u, v);
  for (std::size_t i = 0; i < marked; ++i) g.marked.push_back(i);
  auto p = dhc_pair(g);
  return {p.left, p.right};
}

void thread_args(benchmark::internal::Benchmark* b, std::initializer_list<int64_t> sizes) {
  const int max_threads = omp_get_max_threads();
  for (int64_t n : sizes)
    for (int t = 1; t <= max_threads; t *= 2) b->Args({n, t});
}

void BM_CcnfsSerial(benchmark::State& s) { run_serial(s, ccnfs_pair); }
void BM_CcnfsParallel(benchmark::State& s) { run_parallel(s, ccnfs_pair); }
BENCHMARK(BM_CcnfsSerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CcnfsParallel)->Apply([](auto* b) { thread_args(b, {8, 12, 16}); })->Unit(benchmark::kMillisecond);

void BM_SharingSerial(benchmark::State& s) { run_serial(s, sharing_pair); }
void BM_SharingParallel(benchmark::State& s) { run_parallel(s, sharing_pair); }
BENCHMARK(BM_SharingSerial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SharingParallel)->Apply([](auto* b) { thread_args(b, {5, 20}); })->Unit(benchmark::kMillisecond);

void BM_MutantSerial(benchmark::State& s) { run_serial(s, mutant_pair); }
BENCHMARK(BM_MutantSerial)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_DhcSerial(benchmark::State& s) { run_serial(s, dhc_k5); }
void BM_DhcParallel(benchmark::State& s) { run_parallel(s, dhc_k5); }
BENCHMARK(BM_DhcSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DhcParallel)->Apply([](auto* b) { thread_args(b, {2, 4}); })->Unit(benchmark::kMillisecond);

void BM_AllparAutomaton(benchmark::State& state) {
  const auto s = allpar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto a = encode(s);
    benchmark::DoNotOptimize(nfa_inclusion(a, a).included);
  }
}
BENCHMARK(BM_AllparAutomaton)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_AllparEventStructure(benchmark::State& state) {
  const auto s = allpar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_inclusion(s, s).included);
}
BENCHMARK(BM_AllparEventStructure)->Arg(8)->Arg(14)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
