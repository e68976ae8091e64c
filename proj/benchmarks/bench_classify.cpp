#include <benchmark/benchmark.h>

#include "exstructa/exact_structure.hpp"
#include "exstructa/jh.hpp"
#include "exstructa/report.hpp"

using namespace exstructa;

namespace {

// the interval calculus over every structure of a Nakayama algebra
void BM_FastAwAllStructures(benchmark::State& state) {
  auto alg = linear_a(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int aw = 0;
    for (const auto& e : enumerate_structures(alg)) aw += is_aw_fast(e);
    benchmark::DoNotOptimize(aw);
  }
}
BENCHMARK(BM_FastAwAllStructures)->Arg(3)->Arg(4)->Arg(5);

// brute-force verdicts on all structures, dimension bound from the argument
void BM_CategoryEvaluatorA3(benchmark::State& state) {
  auto cat = nakayama_catalog(linear_a(3), 2);
  int bound = static_cast<int>(state.range(0));
  auto structures = select_structures(cat, {});
  for (auto _ : state) {
    CategoryEvaluator ev(cat, bound, default_thread_count());
    benchmark::DoNotOptimize(ev.evaluate(structures).size());
  }
}
BENCHMARK(BM_CategoryEvaluatorA3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ClassifySink(benchmark::State& state) {
  auto cat = load_algebra("sink3", 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(cat, select_structures(cat, {}), 4, 1).rows.size());
}
BENCHMARK(BM_ClassifySink)->Unit(benchmark::kMillisecond);

}  // namespace
