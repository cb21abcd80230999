#include <benchmark/benchmark.h>

#include "rothkit/bohr.hpp"
#include "rothkit/harmonic.hpp"
#include "rothkit/increment.hpp"
#include "rothkit/moments.hpp"
#include "rothkit/r3.hpp"
#include "rothkit/rng.hpp"

using namespace rothkit;

namespace {

GFunc random_function(const Group& g, Rng& rng) {
  GFunc f(g);
  for (Index x = 0; x < g.size(); ++x) f[x] = cplx(rng.uniform(), rng.uniform());
  return f;
}

Group cyclic(benchmark::State& state) { return Group::make({static_cast<std::int64_t>(state.range(0))}); }

void BM_ConvolveFft(benchmark::State& state) {
  Rng rng(1);
  const Group g = cyclic(state);
  const GFunc f = random_function(g, rng), h = random_function(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, h, ConvolutionMethod::Fft));
}
// 1009 and 2003 are primes above the naive-prime cutoff, so they take the Bluestein path.
BENCHMARK(BM_ConvolveFft)->Arg(360)->Arg(729)->Arg(1009)->Arg(2003)->Arg(4096);

void BM_ConvolveNaive(benchmark::State& state) {
  Rng rng(1);
  const Group g = cyclic(state);
  const GFunc f = random_function(g, rng), h = random_function(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, h, ConvolutionMethod::Naive));
}
BENCHMARK(BM_ConvolveNaive)->Arg(360)->Arg(1009);

void BM_Count3APs(benchmark::State& state) {
  Rng rng(2);
  const Group g = cyclic(state);
  const Subset a = random_subset(g, 0.3, rng);
  const auto method = state.range(1) ? CountMethod::Loop : CountMethod::Convolution;
  for (auto _ : state) benchmark::DoNotOptimize(count_3aps(a, method));
}
BENCHMARK(BM_Count3APs)->Args({729, 0})->Args({729, 1})->Args({2001, 0})->Args({2001, 1});

void BM_R3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if (state.range(1)) {
      benchmark::DoNotOptimize(r3_bitmask(n));
    } else {
      benchmark::DoNotOptimize(r3_branch_bound(n));
    }
  }
}
BENCHMARK(BM_R3)->Args({30, 0})->Args({30, 1})->Args({40, 0})->Args({40, 1})->Unit(benchmark::kMillisecond);

void BM_BohrRegularize(benchmark::State& state) {
  Rng rng(3);
  const Group g = cyclic(state);
  const BohrSet b = BohrSet::build(g, {1 + rng.below(g.size() - 1), 1 + rng.below(g.size() - 1)}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(regularize(b));
}
BENCHMARK(BM_BohrRegularize)->Arg(1009)->Arg(2003);

void BM_CentralMoment(benchmark::State& state) {
  const BinomialSpec spec{state.range(0), Rational(3, 10)};
  for (auto _ : state) benchmark::DoNotOptimize(central_moments(spec, 12));
}
BENCHMARK(BM_CentralMoment)->Arg(10)->Arg(30);

void BM_RunIteration(benchmark::State& state) {
  Rng rng(4);
  const Group g = cyclic(state);
  const Subset a = random_subset(g, 0.2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(run_iteration(g, a, IncrementParams{}));
}
BENCHMARK(BM_RunIteration)->Arg(401)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_RunIterationCapSet(benchmark::State& state) {
  const Group g = Group::make({3, 3, 3, 3, 3, 3});
  std::vector<Index> m;
  for (Index x = 0; x < g.size(); ++x) {
    bool ok = true;
    for (auto c : g.coords_of(x)) ok = ok && c < 2;
    if (ok) m.push_back(x);
  }
  const Subset a(g, m);
  for (auto _ : state) benchmark::DoNotOptimize(run_iteration(g, a, IncrementParams{}));
}
BENCHMARK(BM_RunIterationCapSet)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
