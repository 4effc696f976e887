#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fmb/bounds.hpp"
#include "fmb/named_examples.hpp"
#include "fmb/netspace.hpp"
#include "fmb/opnorm.hpp"
#include "fmb/rearrange.hpp"

namespace {

fmb::SeqSymbol random_symbol(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return fmb::SeqSymbol::from_real(-static_cast<fmb::Index>(n / 2), v, true);
}

void BM_NetNormSeq(benchmark::State& state) {
  const auto a = random_symbol(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fmb::net_norm_seq(a, 4.0 / 3.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NetNormSeq)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SandwichSeq(benchmark::State& state) {
  const auto ex = fmb::example_examH2(2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fmb::sandwich(ex.seq(), ex.exponents).ratio);
}
BENCHMARK(BM_SandwichSeq)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_LorentzFun(benchmark::State& state) {
  const auto ex = fmb::example_exmH1(2.0, {-5, 10});
  const auto B = fmb::block_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fmb::lorentz_fun_norm(ex.fun(), 2.0, B));
}
BENCHMARK(BM_LorentzFun)->Arg(0)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EstimateOpnorm(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto l = random_symbol(N / 4);
  const auto T = fmb::DiscreteMultiplier::periodic(l, N);
  fmb::OpNormOptions o;
  o.iterations = 50;
  o.restarts = 4;
  o.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(fmb::estimate_opnorm(T, 4.0 / 3.0, 4.0, o).value);
}
BENCHMARK(BM_EstimateOpnorm)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
