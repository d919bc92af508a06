#include <benchmark/benchmark.h>

#include <random>

#include "fbc/fbc.hpp"

namespace {

fbc::Configuration chain(const benchmark::State& state) {
  return fbc::corpus::example_7_6(static_cast<int>(state.range(0)));
}

// Random type S configuration with up to range(0) angles and degree at most 6.
fbc::Configuration random_type_s(const benchmark::State& state) {
  fbc::RandomParams params;
  params.max_angles = static_cast<int>(state.range(0));
  params.max_degree = 6;
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  return *fbc::random_configuration(rng, params, [&](const fbc::Configuration& c) {
    return c.size() * 2 >= params.max_angles && fbc::check_type_s(c).holds;
  });
}

void BM_ClosureChain(benchmark::State& state) {
  fbc::Configuration c = chain(state);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::congruence_closure(c).total_dim());
}

void BM_TypeSChain(benchmark::State& state) {
  fbc::Configuration c = chain(state);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::type_s_basis(c).total_dim());
}

void BM_ClosureRandom(benchmark::State& state) {
  fbc::Configuration c = random_type_s(state);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::congruence_closure(c).total_dim());
}

void BM_TypeSRandom(benchmark::State& state) {
  fbc::Configuration c = random_type_s(state);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::type_s_basis(c).total_dim());
}

void BM_IdealGenerators(benchmark::State& state) {
  fbc::Configuration c = chain(state);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::ideal_generators(c).fr1.size());
}

}  // namespace

BENCHMARK(BM_ClosureChain)->DenseRange(2, 8, 2);
BENCHMARK(BM_TypeSChain)->DenseRange(2, 8, 2);
BENCHMARK(BM_ClosureRandom)->DenseRange(6, 12, 3);
BENCHMARK(BM_TypeSRandom)->DenseRange(6, 12, 3);
BENCHMARK(BM_IdealGenerators)->DenseRange(2, 8, 2);
BENCHMARK_MAIN();
