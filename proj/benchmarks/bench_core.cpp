#include <benchmark/benchmark.h>

#include <cliffgrp/centralizer.hpp>
#include <cliffgrp/lie.hpp>
#include <cliffgrp/linalg.hpp>
#include <cliffgrp/sample.hpp>
#include <cliffgrp/verify.hpp>

using namespace cliffgrp;

namespace {

Signature sig_for(int n) {
  // a mixed degenerate signature with one null generator per size
  return Signature(n - 1 > 0 ? n - 1 : 0, 0, n - (n - 1 > 0 ? n - 1 : 0));
}

void BM_GeometricProduct(benchmark::State& state) {
  Signature sig = sig_for(static_cast<int>(state.range(0)));
  Multivector a = sample_invertible(sig, SampleStrategy::Generic, 1);
  Multivector b = sample_invertible(sig, SampleStrategy::Generic, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct)->Arg(3)->Arg(5)->Arg(8);

void BM_Inverse(benchmark::State& state) {
  // non-degenerate so the short unit-plus-nilpotent path never triggers
  Signature sig(static_cast<int>(state.range(0)), 0, 0);
  Multivector a = sample_invertible(sig, SampleStrategy::Generic, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse)->Arg(3)->Arg(5)->Arg(6);

void BM_InverseNilpotentPath(benchmark::State& state) {
  Signature sig(1, 0, static_cast<int>(state.range(0)) - 1);
  Multivector a = sample_invertible(sig, SampleStrategy::LambdaUnits, 5);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_InverseNilpotentPath)->Arg(5)->Arg(8);

void BM_BruteforceCentralizer(benchmark::State& state) {
  Signature sig = sig_for(static_cast<int>(state.range(0)));
  Subspace vectors = grade_subspace(1, sig);
  for (auto _ : state)
    benchmark::DoNotOptimize(bruteforce_centralizer(vectors, false, sig));
}
BENCHMARK(BM_BruteforceCentralizer)->Arg(3)->Arg(4)->Arg(5);

void BM_Membership(benchmark::State& state) {
  Signature sig(1, 0, 2);
  Multivector t = sample_invertible(sig, SampleStrategy::Generic, 4);
  for (auto _ : state) {
    ElementContext ctx(t);
    benchmark::DoNotOptimize(member(GroupId::q(1), ctx).verdict);
  }
}
BENCHMARK(BM_Membership);

void BM_TangentOracle(benchmark::State& state) {
  Signature sig = sig_for(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tangent_oracle(GroupId::qcheck(3), sig));
}
BENCHMARK(BM_TangentOracle)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
