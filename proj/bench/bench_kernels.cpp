#include <benchmark/benchmark.h>

#include "kummer7/curves.hpp"
#include "kummer7/finitefield.hpp"
#include "kummer7/kernels.hpp"

namespace {

using namespace kummer7;

const EllipticCurveQ& curve() {
  static const EllipticCurveQ e{{Rational(0), Rational(1), Rational(-1)}};
  return e;
}

void BM_SurfaceSerial(benchmark::State& state) {
  const PrimeField f = build_legendre_table(PrimeField(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::surface_character_sum(f));
}

void BM_SurfaceOmp(benchmark::State& state) {
  const PrimeField f = build_legendre_table(PrimeField(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::surface_character_sum(f));
}

void BM_ProductSerial(benchmark::State& state) {
  const PrimeField f = build_legendre_table(PrimeField(static_cast<std::uint64_t>(state.range(0))));
  const CubicMod e = curve().reduce_mod(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::product_character_sum(e, f));
}

void BM_ProductOmp(benchmark::State& state) {
  const PrimeField f = build_legendre_table(PrimeField(static_cast<std::uint64_t>(state.range(0))));
  const CubicMod e = curve().reduce_mod(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::product_character_sum(e, f));
}

}  // namespace

BENCHMARK(BM_SurfaceSerial)->Arg(1009)->Arg(2003)->Arg(4001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceOmp)->Arg(1009)->Arg(2003)->Arg(4001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductSerial)->Arg(101)->Arg(151)->Arg(211)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductOmp)->Arg(101)->Arg(151)->Arg(211)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
