#include <hyperdelta/analytic.hpp>
#include <hyperdelta/kernels.hpp>
#include <hyperdelta/oracle/quadrature.hpp>
#include <hyperdelta/oracle/shadows.hpp>
#include <hyperdelta/series.hpp>

#include <benchmark/benchmark.h>

using namespace hyperdelta;

namespace {

SeriesNumber sample() {
  return SeriesNumber(Real(2)) + SeriesNumber::eta(Exponent(1, 2)) * Real(3) - SeriesNumber::eta() * Real(5) +
         SeriesNumber::eta(Exponent(5, 2));
}

void BM_SeriesMul(benchmark::State& state) {
  const SeriesNumber a = sample(), b = invert(sample());
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul);

void BM_SeriesInvert(benchmark::State& state) {
  const SeriesNumber a = sample();
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_SeriesInvert);

void BM_ArctanExt(benchmark::State& state) {
  const SeriesNumber x = invert(SeriesNumber::eta()) * Real(3);
  for (auto _ : state) benchmark::DoNotOptimize(arctan_ext(x));
}
BENCHMARK(BM_ArctanExt);

void BM_SymbolicSift(benchmark::State& state) {
  const TestFunction f = TestFunction::parse("poly: 1 + 2*x - x^3");
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sift(f, Real(1), SeriesNumber::eta(), SeriesNumber::eta(Exponent(1, 2))));
}
BENCHMARK(BM_SymbolicSift);

void BM_OracleSift(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::sift_integral([](double x) { return 1 + 2 * x - x * x * x; }, 1, 1e-8, 1e-4));
}
BENCHMARK(BM_OracleSift);

}  // namespace

BENCHMARK_MAIN();
