#include <benchmark/benchmark.h>

#include <random>

#include "minv/arrays.hpp"
#include "minv/families.hpp"
#include "minv/numeric.hpp"

using namespace minv;

namespace {

MultinomialSystem oscillator() {
  return MultinomialSystem::make(
      2, {SystemTerm{RatVector::column({1, 0}), RatVector::row({-1, 1})},
          SystemTerm{RatVector::column({0, -1}), RatVector::row({1, -1})}});
}

MultinomialSystem cubic_example() {
  return reduce_scalar_ode(
      parse_scalar_ode("ode 2\nterm -1 | -1 2\nterm 1 | 1 0\nterm 1 | 3 0\n"));
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> val(-9, 9);
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = Rational(val(rng), 1 + (val(rng) & 3));
  return m;
}

void BM_Rref(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const RatMatrix m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_SearchOscillator(benchmark::State& state) {
  const MultinomialSystem s = oscillator();
  for (auto _ : state) benchmark::DoNotOptimize(search(s, 2, 2));
}

void BM_SearchCubic3x3(benchmark::State& state) {
  const MultinomialSystem s = cubic_example();
  for (auto _ : state) benchmark::DoNotOptimize(search(s, 3, 3));
}

void BM_VerifyLogFamily(benchmark::State& state) {
  const LogFamilyResult fam = log_family({state.range(0), 0, -1, 2, -3});
  const MultinomialSystem s = reduce_scalar_ode(fam.ode);
  for (auto _ : state) benchmark::DoNotOptimize(verify_logB(fam.integral, s));
}

void BM_Rk4Drift(benchmark::State& state) {
  const MultinomialSystem s = oscillator();
  const Integral energy{AlgebraicIntegral{
      {IntegralTerm{1, RatVector::row({0, 2})}, IntegralTerm{1, RatVector::row({2, 0})}}}};
  for (auto _ : state) {
    const Trajectory tr = rk4(s, {0.6, 0.8}, 1e-3, 1.0);
    benchmark::DoNotOptimize(drift(energy, tr));
  }
}

}  // namespace

BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_SearchOscillator);
BENCHMARK(BM_SearchCubic3x3);
BENCHMARK(BM_VerifyLogFamily)->Arg(4)->Arg(8);
BENCHMARK(BM_Rk4Drift);

BENCHMARK_MAIN();
