#include <benchmark/benchmark.h>

#include <random>

#include "discstab/bezout.hpp"
#include "discstab/cert.hpp"
#include "discstab/counterexample.hpp"
#include "discstab/reduce.hpp"
#include "discstab/roots.hpp"

using namespace discstab;

namespace {

RealPoly random_poly(std::mt19937_64& rng, int degree, int range) {
  std::uniform_int_distribution<int> c(-range, range);
  std::vector<Rational> v(degree + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return RealPoly(v);
}

void BM_SolveBezout(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int degree = static_cast<int>(state.range(0));
  std::vector<std::pair<DiscElement, DiscElement>> pairs;
  while (pairs.size() < 16) {
    const auto f = DiscElement::from_poly(random_poly(rng, degree, 10));
    const auto g = DiscElement::from_poly(random_poly(rng, degree, 10));
    if (gcd(f.num(), g.num()).degree() == 0) pairs.emplace_back(f, g);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(solve_bezout(f, g));
  }
}
BENCHMARK(BM_SolveBezout)->Arg(4)->Arg(8)->Arg(16);

void BM_Roots(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const RealPoly p = random_poly(rng, static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->Arg(8)->Arg(16)->Arg(32);

void BM_CertifyUnit(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const RealPoly p = random_poly(rng, static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(certify_unit(p));
}
BENCHMARK(BM_CertifyUnit)->Arg(8)->Arg(16);

void BM_InvertiblePair(benchmark::State& state) {
  const auto f = DiscElement::from_poly(RealPoly{0, 0, 1});
  const auto g = DiscElement::from_poly(RealPoly{1, 0, 0, 0, -16});
  for (auto _ : state) benchmark::DoNotOptimize(is_invertible_pair(f, g));
}
BENCHMARK(BM_InvertiblePair)->Unit(benchmark::kMillisecond);

void BM_FindH(benchmark::State& state) {
  const auto f = DiscElement::from_poly(RealPoly{0, 0, 1});
  const auto g = DiscElement::from_poly(RealPoly{1, 0, -1});
  for (auto _ : state) benchmark::DoNotOptimize(find_h(f, g));
}
BENCHMARK(BM_FindH)->Unit(benchmark::kMillisecond);

void BM_Falsify(benchmark::State& state) {
  const auto t = make_triple(static_cast<int>(state.range(0)));
  SearchOptions opts;
  opts.budget = 2000;
  for (auto _ : state) benchmark::DoNotOptimize(falsify(t, opts));
}
BENCHMARK(BM_Falsify)->Arg(2)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
