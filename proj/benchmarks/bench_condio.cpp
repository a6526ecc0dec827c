// Benchmarks for the hot paths: continuant evaluation (both routes), chain
// growth, unit-tuple enumeration, the continued fraction bridge, and the
// factorization table driver.

#include <benchmark/benchmark.h>

#include <condio/condio.hpp>

#include <random>

namespace {

using condio::Int;
using condio::IntTuple;

IntTuple random_tuple(size_t len, long bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntTuple xs;
  xs.reserve(len);
  for (size_t i = 0; i < len; ++i) xs.emplace_back(dist(rng));
  return xs;
}

condio::Solution chain_seed() {
  condio::EquationInstance inst(condio::IntPolynomial::parse("1,0,0,0,1"), 1, 2);
  IntTuple xs;
  for (long v : {0L, 2L, 8L}) xs.emplace_back(v);
  return condio::Solution(inst, xs);
}

}  // namespace

static void ContinuantRecurrence(benchmark::State& state) {
  IntTuple xs = random_tuple(static_cast<size_t>(state.range(0)), 50, 0xBE);
  for (auto _ : state) {
    Int k = condio::continuant(1, xs);
    benchmark::DoNotOptimize(k);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ContinuantRecurrence)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void ContinuantMatrixProduct(benchmark::State& state) {
  IntTuple xs = random_tuple(static_cast<size_t>(state.range(0)), 50, 0xBE);
  for (auto _ : state) {
    condio::Matrix2 m = condio::continuant_matrix(1, xs);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ContinuantMatrixProduct)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void ChainGrowRight(benchmark::State& state) {
  for (auto _ : state) {
    condio::Chain chain(chain_seed());
    chain.grow_right(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(chain.rightmost());
  }
}
BENCHMARK(ChainGrowRight)->DenseRange(2, 10, 2);

static void EnumerateUnitTuples(benchmark::State& state) {
  for (auto _ : state) {
    auto tuples = condio::enumerate_unit_tuples(1, 3, state.range(0), 1);
    benchmark::DoNotOptimize(tuples.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(EnumerateUnitTuples)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void ContinuedFractionExpand(benchmark::State& state) {
  // worst case quotient count: consecutive large Fibonacci numbers
  Int a = 1, b = 1;
  for (int i = 0; i < state.range(0); ++i) {
    Int next = a + b;
    a = b;
    b = next;
  }
  for (auto _ : state) {
    auto cf = condio::cf_expand(b, a, condio::Parity::even);
    benchmark::DoNotOptimize(cf.quotients.size());
  }
}
BENCHMARK(ContinuedFractionExpand)->Arg(64)->Arg(256)->Arg(1024);

static void FactorizationTable(benchmark::State& state) {
  auto P = condio::IntPolynomial::parse("1,0,0,0,1");
  for (auto _ : state) {
    auto rows = condio::factorization_table(P, state.range(0), 1);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(FactorizationTable)->Arg(5)->Arg(10);

BENCHMARK_MAIN();
