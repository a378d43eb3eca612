#include <benchmark/benchmark.h>

#include "sextic/families.hpp"
#include "sextic/s6.hpp"

namespace {

using namespace sextic;

// Parameter size grows with the range argument: (a, b, m, n) = (1, 1, k, k - 1).
void Isog3Pipeline(benchmark::State& state) {
  const long k = state.range(0);
  const CurveModel e = isog3_curve(1, 1);
  const S6Point p = isog3_point(1, 1, k, k - 1);
  for (auto _ : state) benchmark::DoNotOptimize(point_to_sextic_field(e, p));
}
BENCHMARK(Isog3Pipeline)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void E160b1Pipeline(benchmark::State& state) {
  const CurveModel e = e160b1_curve();
  const S6Point p = e160b1_point(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(point_to_sextic_field(e, p));
}
BENCHMARK(E160b1Pipeline)->Unit(benchmark::kMillisecond);

void IsomorphismTest(benchmark::State& state) {
  const UniPoly f({Rational(1), Rational(-4), Rational(1), Rational(1)});
  const UniPoly g = f.shift(Rational(5)).scale_variable(Rational(3)).monic();
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic_cubic(f, g));
}
BENCHMARK(IsomorphismTest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
