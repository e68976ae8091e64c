#include <benchmark/benchmark.h>

#include "exstructa/catalog.hpp"
#include "exstructa/object_atlas.hpp"
#include "exstructa/oracle.hpp"

using namespace exstructa;

namespace {

const ModuleCatalog& a3() {
  static ModuleCatalog c = nakayama_catalog(linear_a(3), 2);
  return c;
}

QuiverRep big_object() {
  const auto& c = a3();
  return realize(c, {c.interval_index({1, 3}), c.interval_index({2, 2}), c.interval_index({2, 1})});
}

void BM_EnumerateSubmodules(benchmark::State& state) {
  auto x = big_object();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(x).size());
}
BENCHMARK(BM_EnumerateSubmodules);

void BM_IsoClass(benchmark::State& state) {
  auto x = big_object();
  for (auto _ : state) benchmark::DoNotOptimize(iso_class(a3(), x));
}
BENCHMARK(BM_IsoClass);

void BM_SocleMask(benchmark::State& state) {
  const auto& s = a3().ar[1].ses;
  for (auto _ : state) benchmark::DoNotOptimize(socle_mask(a3(), s));
}
BENCHMARK(BM_SocleMask);

void BM_ObjectAtlas(benchmark::State& state) {
  auto x = big_object();
  for (auto _ : state) {
    ObjectAtlas atlas(a3(), x);
    benchmark::DoNotOptimize(atlas.size());
  }
}
BENCHMARK(BM_ObjectAtlas)->Unit(benchmark::kMillisecond);

void BM_AxiomValidation(benchmark::State& state) {
  auto b = from_hex("5", 3);
  for (auto _ : state) benchmark::DoNotOptimize(validate_exact_axioms(a3(), b, 4).pass);
}
BENCHMARK(BM_AxiomValidation)->Unit(benchmark::kMillisecond);

}  // namespace
