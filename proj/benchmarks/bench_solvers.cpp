#include <benchmark/benchmark.h>

#include <random>

#include "cookiecut/compose.hpp"
#include "cookiecut/core.hpp"
#include "cookiecut/geometry.hpp"
#include "cookiecut/oracle.hpp"
#include "cookiecut/random_gen.hpp"
#include "cookiecut/solver_prime.hpp"
#include "cookiecut/solver_two.hpp"

namespace {

using namespace cookiecut;

Instance bench_instance(int n, int m, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  RandomSpec spec;
  spec.n = n;
  spec.m = m;
  return random_instance(rng, spec);
}

void BM_solve_two(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_two(inst));
  }
}
BENCHMARK(BM_solve_two)->Arg(10)->Arg(20)->Arg(40);

void BM_solve_two_m2(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_two_m2(inst));
  }
}
BENCHMARK(BM_solve_two_m2)->Arg(10)->Arg(30);

void BM_solve_prime(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Instance inst = bench_instance(static_cast<int>(state.range(2)), m, 3);
  const Board board = layout(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_prime(board, p));
  }
}
BENCHMARK(BM_solve_prime)
    ->Args({2, 2, 12})
    ->Args({3, 2, 12})
    ->Args({5, 1, 12})
    ->Args({5, 2, 8})
    ->Unit(benchmark::kMillisecond);

void BM_solve_pow2(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_pow2(inst, 4));
  }
}
BENCHMARK(BM_solve_pow2)->Arg(13)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_oracle(benchmark::State& state) {
  const Instance inst = bench_instance(static_cast<int>(state.range(0)), 2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_optimal(inst, 3, 4));
  }
}
BENCHMARK(BM_oracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_validate_gale(benchmark::State& state) {
  const GalePointSet pts = gale_points(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_gale(pts));
  }
}
BENCHMARK(BM_validate_gale)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
