#include <benchmark/benchmark.h>

#include <random>

#include "qpflow/orders.hpp"
#include "qpflow/probe.hpp"
#include "qpflow/symmetry.hpp"

using namespace qpflow;

namespace {

NumberField biquadratic() { return make_field(IntPoly{1, 0, -10, 0, 1}, 3); }

void BM_FieldMultiply(benchmark::State& state) {
  NumberField f = biquadratic();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(-50, 50);
  auto random = [&] {
    std::vector<Rational> v;
    for (int k = 0; k < 4; ++k) v.push_back(make_rational(c(rng), 7));
    return f.element(std::move(v));
  };
  FieldElement x = random(), y = random();
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_FieldMultiply);

void BM_FundamentalUnit(benchmark::State& state) {
  long d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_unit(d));
}
BENCHMARK(BM_FundamentalUnit)->Arg(13)->Arg(94)->Arg(661);

void BM_EnumerateQuadratic(benchmark::State& state) {
  NumberField f = make_field(IntPoly{-5, 0, 1}, 1);
  Flow x = make_flow(f, {f.one(), f.generator()});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_multipliers_bounded(x, state.range(0)));
}
BENCHMARK(BM_EnumerateQuadratic)->Arg(8)->Arg(32);

void BM_MultiplierMatrix4(benchmark::State& state) {
  NumberField f = biquadratic();
  FieldElement g = f.generator();
  FieldElement s2 = Rational(1, 2) * (g * g * g - Rational(9) * g);
  FieldElement s3 = Rational(1, 2) * (Rational(11) * g - g * g * g);
  FieldElement s6 = Rational(1, 2) * (g * g - Rational(5) * f.one());
  Flow x = make_flow(f, {s6, s3, s2, f.one()});
  FieldElement alpha = Rational(2) * s6 + Rational(4) * s3 + Rational(5) * s2 + Rational(5) * f.one();
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_matrix(x, alpha));
}
BENCHMARK(BM_MultiplierMatrix4);

void BM_ProbeMinpoly(benchmark::State& state) {
  NumberField f = biquadratic();
  std::string x = to_decimal(f.generator(), 100);
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minpoly_from_decimal(x, degree, pow10(12), 100));
  }
}
BENCHMARK(BM_ProbeMinpoly)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
