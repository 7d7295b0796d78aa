// Serial reference kernels against their OpenMP variants.
#include <benchmark/benchmark.h>

#include <random>

#include "frobkern/kernels.hpp"
#include "frobkern/sl2.hpp"

using namespace fk;

namespace {

const Field& f5() { return Field::get(5); }

template <bool Parallel>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  FpMatrix a = FpMatrix::random(f5(), n, n, rng), b = FpMatrix::random(f5(), n, n, rng), c(f5(), n, n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::matmul_parallel(a, b, c);
    else
      kernels::matmul_serial(a, b, c);
    benchmark::DoNotOptimize(c(0, 0));
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void bm_rank1_pairs(benchmark::State& state) {
  const Field& f = Field::get(static_cast<int>(state.range(0)));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::rank1_pairs_parallel(f, r) : kernels::rank1_pairs_serial(f, r));
}

template <bool Parallel>
void bm_nonfree_points(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  FpModule m = sl2::build_verma_r1(p - 1, p);
  const Field& big = Field::get(p * p);
  for (auto _ : state) {
    auto pts = Parallel ? sl2::nonfree_points_parallel(m, big) : sl2::nonfree_points_serial(m, big);
    benchmark::DoNotOptimize(pts.data());
  }
}

}  // namespace

BENCHMARK(bm_matmul<false>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_matmul<true>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_rank1_pairs<false>)->Args({3, 2})->Args({5, 2})->Args({3, 3});
BENCHMARK(bm_rank1_pairs<true>)->Args({3, 2})->Args({5, 2})->Args({3, 3});
BENCHMARK(bm_nonfree_points<false>)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(bm_nonfree_points<true>)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
