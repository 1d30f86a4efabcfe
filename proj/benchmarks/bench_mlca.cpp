#include <benchmark/benchmark.h>

#include <random>

#include "mlca/generators.hpp"
#include "mlca/maximality.hpp"
#include "mlca/phaseshift.hpp"
#include "mlca/primitivity.hpp"
#include "mlca/prng.hpp"
#include "mlca/synthesis.hpp"

namespace {

mlca::RuleVector random_90150(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> d(n);
  for (auto& v : d) v = rng() & 1;
  return mlca::RuleVector::rules90150(d);
}

void BM_CharPolyRecurrence(benchmark::State& state) {
  mlca::RuleVector r = random_90150(std::size_t(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(mlca::char_poly(r, mlca::Boundary::Null));
}
BENCHMARK(BM_CharPolyRecurrence)->Arg(16)->Arg(64)->Arg(256);

void BM_CharPolyPeriodic(benchmark::State& state) {
  mlca::RuleVector r = random_90150(std::size_t(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(mlca::char_poly(r, mlca::Boundary::Periodic));
}
BENCHMARK(BM_CharPolyPeriodic)->Arg(16)->Arg(32);

void BM_IsPrimitive(benchmark::State& state) {
  // x^31 + x^3 + 1, primitive; 2^31 - 1 is prime so the order check is light
  mlca::Poly p = mlca::Poly::from_mask((std::uint64_t(1) << 31) | (1u << 3) | 1u);
  for (auto _ : state) benchmark::DoNotOptimize(mlca::is_primitive(p));
}
BENCHMARK(BM_IsPrimitive);

void BM_Synthesize(benchmark::State& state) {
  mlca::Poly p = mlca::Poly::from_mask((std::uint64_t(1) << 31) | (1u << 3) | 1u);
  for (auto _ : state) benchmark::DoNotOptimize(mlca::synthesize(p));
}
BENCHMARK(BM_Synthesize);

void BM_ExhaustiveWalk(benchmark::State& state) {
  mlca::RuleVector r = mlca::minimal_cost_search(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mlca::decide_maximal_exhaustive(r));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t(1) << state.range(0)) - 1));
}
BENCHMARK(BM_ExhaustiveWalk)->Arg(16)->Arg(20)->Arg(24);

void BM_CycleStructure(benchmark::State& state) {
  mlca::RuleVector r = random_90150(std::size_t(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(mlca::cycle_structure(r));
  state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << state.range(0)));
}
BENCHMARK(BM_CycleStructure)->Arg(12)->Arg(16)->Arg(20);

void BM_PhaseShifts(benchmark::State& state) {
  mlca::RuleVector r = mlca::minimal_cost_search(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mlca::phase_shifts(r, 0));
}
BENCHMARK(BM_PhaseShifts)->Arg(8)->Arg(12);

void BM_StreamBits(benchmark::State& state) {
  std::size_t n = 16;
  mlca::StreamSpec spec = mlca::StreamSpec::make(
      mlca::minimal_cost_search(n), mlca::Configuration::from_index(mlca::gf2(), n, 1), 0);
  std::uint64_t steps = std::uint64_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mlca::stream_bits(spec, steps));
  state.SetBytesProcessed(state.iterations() * std::int64_t(steps) * std::int64_t(n) / 8);
}
BENCHMARK(BM_StreamBits)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
