#include <benchmark/benchmark.h>

#include "stokesline/expansions.hpp"
#include "stokesline/gamma_poly.hpp"
#include "stokesline/oracle.hpp"

using namespace stokesline;

namespace {

void BM_revert_saddle_map(benchmark::State& state) {
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exactpoly::revert_saddle_map(order));
  }
}
BENCHMARK(BM_revert_saddle_map)->Arg(10)->Arg(20)->Arg(30);

void BM_g_expansion(benchmark::State& state) {
  auto kmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exactpoly::g_expansion(kmax));
  }
}
BENCHMARK(BM_g_expansion)->Arg(4)->Arg(8)->Arg(12);

void BM_i_stokes(benchmark::State& state) {
  Precision p = Precision::for_digits(25);
  expansions::BesselOrder nu(BigReal::from_decimal("0.25", p));
  BigReal x(state.range(0), p);
  int M = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expansions::i_stokes(nu, x, M, p));
  }
}
BENCHMARK(BM_i_stokes)->Args({10, 1})->Args({10, 7})->Args({25, 7});

void BM_k_stokes(benchmark::State& state) {
  Precision p = Precision::for_digits(25);
  expansions::BesselOrder nu(BigReal::from_decimal("0.25", p));
  BigReal x(state.range(0), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        expansions::k_stokes(nu, x, 7, expansions::StokesSign::plus, p));
  }
}
BENCHMARK(BM_k_stokes)->Arg(10)->Arg(25);

void BM_bessel_i_series(benchmark::State& state) {
  oracle::OracleConfig cfg(state.range(0));
  Precision p = cfg.working_precision();
  oracle::BesselOrder nu(BigReal::from_decimal("0.25", p));
  BigReal x(25, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::bessel_i_series(nu, x, cfg));
  }
}
BENCHMARK(BM_bessel_i_series)->Arg(15)->Arg(30)->Arg(60);

void BM_f_remainder(benchmark::State& state) {
  oracle::OracleConfig cfg(15);
  Precision p = cfg.working_precision();
  oracle::BesselOrder nu(BigReal::from_decimal("0.25", p));
  BigReal x(state.range(0), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::f_remainder(nu, x, cfg));
  }
}
BENCHMARK(BM_f_remainder)->Arg(10)->Arg(25);

} // namespace

BENCHMARK_MAIN();
