#include <benchmark/benchmark.h>

#include "l1f/decision.hpp"

using namespace l1f;

namespace {

CycElem sample_elem(long conductor) {
  Rng rng(conductor, 99);
  CycElem v = CycElem::from_rational(rng.small_rational_nonzero(), conductor);
  v += CycElem::root(conductor, rng.uniform(1, conductor - 1)) *
       rng.small_rational_nonzero();
  return v;
}

PeriodicFunction sample_function(long q, long W) {
  Rng rng(q, 7);
  std::vector<CycElem> v(q, CycElem::zero(W));
  CycElem sum = CycElem::zero(W);
  for (long a = 1; a < q; ++a) {
    v[a - 1] = CycElem::from_rational(rng.small_rational(), W) +
               CycElem::root(W, rng.uniform(0, W - 1)) * rng.small_rational();
    sum += v[a - 1];
  }
  v[q - 1] = -sum;
  return PeriodicFunction::make(q, std::move(v));
}

void BM_FieldMul(benchmark::State& state) {
  const long L = state.range(0);
  const CycElem a = sample_elem(L);
  const CycElem b = sample_elem(L);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMul)->Arg(12)->Arg(48)->Arg(240);

void BM_FieldInverse(benchmark::State& state) {
  const long L = state.range(0);
  const CycElem a = sample_elem(L);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse)->Arg(12)->Arg(48)->Arg(240);

void BM_Dft(benchmark::State& state) {
  const long q = state.range(0);
  const PeriodicFunction f = sample_function(q, 2 * q);
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_Dft)->Arg(12)->Arg(24);

void BM_DecidePaperExample(benchmark::State& state) {
  const PeriodicFunction f = example_paper(state.range(0));
  DecideOptions opt;
  opt.precision_bits = 256;
  for (auto _ : state) benchmark::DoNotOptimize(decide(f, opt));
}
BENCHMARK(BM_DecidePaperExample)->Arg(3)->Arg(5);

void BM_EvalFourier(benchmark::State& state) {
  const PeriodicFunction f = sample_function(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_L1_fourier(f, 256));
}
BENCHMARK(BM_EvalFourier)->Arg(12)->Arg(24);

void BM_EvenMembership(benchmark::State& state) {
  const long q = state.range(0);
  const PeriodicFunction f = gen_even_vanishing(q, 5);
  for (auto _ : state) benchmark::DoNotOptimize(decide_even(f));
}
BENCHMARK(BM_EvenMembership)->Arg(12)->Arg(36);

}  // namespace

BENCHMARK_MAIN();
