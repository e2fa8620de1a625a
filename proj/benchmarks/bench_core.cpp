#include <benchmark/benchmark.h>

#include <random>

#include "hyperlie/lambda_space.hpp"
#include "hyperlie/matrix.hpp"

namespace {

using namespace hyperlie;

Poly random_poly(const RingPtr& ring, std::size_t terms, unsigned max_exp, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < ring->size(); ++v) m.set_exponent(v, exp(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out.push_back({m, c});
  }
  return Poly(ring, std::move(out));
}

void BM_Multiply(benchmark::State& state) {
  const RingPtr ring = make_ring({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}});
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poly p = random_poly(ring, n, 6, rng);
  const Poly q = random_poly(ring, n, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DeterminantBareiss(benchmark::State& state) {
  const CurveModel model(static_cast<int>(state.range(0)));
  const PolyMatrix T = build_T(model);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(T));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DeterminantMinors(benchmark::State& state) {
  const CurveModel model(static_cast<int>(state.range(0)));
  const PolyMatrix T = build_T(model);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_by_minors(T));
}
BENCHMARK(BM_DeterminantMinors)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Resultant(benchmark::State& state) {
  const CurveModel model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_R(model));
}
BENCHMARK(BM_Resultant)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
