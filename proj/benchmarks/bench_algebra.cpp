#include <benchmark/benchmark.h>

#include "sextic/numfield.hpp"
#include "sextic/s6.hpp"

namespace {

using namespace sextic;

const UniPoly kF13({Rational(1), Rational(-4), Rational(1), Rational(1)});

void CubicMultiply(benchmark::State& state) {
  const CyclicCubicField k(kF13);
  const CubicElement x = k.element(Rational(-7, 3), Rational(11, 5), Rational(2, 9));
  CubicElement acc = k.embed(1);
  for (auto _ : state) {
    acc = k.element(Rational(1, 2), Rational(3), Rational(-1, 7)) * x;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(CubicMultiply);

void CubicInverse(benchmark::State& state) {
  const CyclicCubicField k(kF13);
  const CubicElement x = k.element(Rational(-7, 3), Rational(11, 5), Rational(2, 9));
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(CubicInverse);

void SexticInverse(benchmark::State& state) {
  const SexticField k6(CyclicCubicField(kF13), BigInt(-26));
  const CyclicCubicField& k3 = k6.cubic();
  const SexticElement x = k6.make(k3.element(Rational(1, 2), Rational(3), Rational(-1, 7)),
                                  k3.element(Rational(-7, 3), Rational(11, 5), Rational(2, 9)));
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(SexticInverse);

void DeltaFormula(benchmark::State& state) {
  const Rational A(3, 7), B(-5, 2), T(11, 3), U(-2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(delta_formula(A, B, T, U));
}
BENCHMARK(DeltaFormula);

void DeltaIdentitySymbolic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(multipoly_equal(delta_formula_poly(), delta_oracle_poly()));
}
BENCHMARK(DeltaIdentitySymbolic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
