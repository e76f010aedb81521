#include <benchmark/benchmark.h>

#include "sn/decomposition.hpp"
#include "sn/element.hpp"
#include "sn/homology.hpp"
#include "sn/ideals.hpp"
#include "sn/unipoly.hpp"

namespace {

sn::Element dense(int n, unsigned d) {
  sn::Element a(n);
  long k = 1;
  for (const auto& m : sn::monomials_up_to(n, d)) a.add_term(m, sn::Rational(k++ % 7 - 3));
  return a;
}

void BM_Multiply(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  sn::Element a = dense(n, 3), b = dense(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(1)->Arg(2)->Arg(3);

void BM_Decompose(benchmark::State& state) {
  sn::Element a = dense(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(sn::to_decomposed(a));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2)->Arg(3);

void BM_Factor(benchmark::State& state) {
  sn::UniPoly p = pow(sn::UniPoly({-2, 0, 1}), 2) * sn::UniPoly({1, 1}) * sn::UniPoly({3, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(sn::uni_factor(p));
}
BENCHMARK(BM_Factor);

void BM_EnumerateIdempotents(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sn::enumerate_idempotent_ideals(n));
}
BENCHMARK(BM_EnumerateIdempotents)->DenseRange(3, 5);

void BM_Anres(benchmark::State& state) {
  unsigned d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    sn::TruncatedComplex c = sn::build_anres(3, d);
    benchmark::DoNotOptimize(sn::check_tag_diagonal_exactness(c));
  }
}
BENCHMARK(BM_Anres)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
