#include <benchmark/benchmark.h>

#include <random>

#include "exstructa/linalg.hpp"

using namespace exstructa;

namespace {

Matrix random_matrix(int p, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(0, p - 1);
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<std::uint8_t>(d(rng));
  return m;
}

void BM_RowReduce(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  int n = static_cast<int>(state.range(1));
  auto base = random_matrix(p, n, 7);
  for (auto _ : state) {
    Matrix m = base;
    benchmark::DoNotOptimize(row_reduce(m));
  }
}
BENCHMARK(BM_RowReduce)->Args({2, 8})->Args({2, 32})->Args({3, 8})->Args({3, 32});

void BM_KernelBasis(benchmark::State& state) {
  auto m = random_matrix(2, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(8)->Arg(24);

void BM_AllSubspaces(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // cached after the first call; measures the lookup
    benchmark::DoNotOptimize(all_subspaces(2, k).size());
  }
}
BENCHMARK(BM_AllSubspaces)->Arg(4)->Arg(6);

}  // namespace
