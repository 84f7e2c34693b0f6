#include <benchmark/benchmark.h>

#include <cmath>

#include "cubicalg/laguerre.hpp"
#include "cubicalg/lattice.hpp"
#include "cubicalg/models.hpp"
#include "cubicalg/oscillator.hpp"
#include "cubicalg/radial_oracle.hpp"

namespace {

using namespace cubicalg;

void BM_LaguerreJet(benchmark::State& state) {
  const laguerre::RadialWavefunction w{static_cast<int>(state.range(0)), 1.5, 1.0};
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(laguerre::radial_jet(w, r));
    r += 1e-6;  // defeat value caching without changing the regime
  }
}
BENCHMARK(BM_LaguerreJet)->Arg(4)->Arg(16)->Arg(64);

void BM_CubicAlgebraExact(benchmark::State& state) {
  const auto sec = lattice::dso_exact_sector(models::DsoParams{5, 2, 1, 2, 1, 1, 1, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice::verify_cubic_algebra(sec, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CubicAlgebraExact)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_TransferProduct(benchmark::State& state) {
  const auto sec = lattice::kc_exact_sector(models::KcParams{});
  const auto l1 = lattice::transfer(sec, 1);
  const auto l2 = lattice::transfer(sec, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(l1 * l2);
  }
}
BENCHMARK(BM_TransferProduct);

void BM_OracleSolve(benchmark::State& state) {
  const auto prob = radial_oracle::dso_problem(1.0, std::sqrt(2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        radial_oracle::solve_lowest(prob, 12.0, static_cast<int>(state.range(0)), 6));
  }
}
BENCHMARK(BM_OracleSolve)->Arg(300)->Arg(900)->Arg(2700)->Unit(benchmark::kMillisecond);

void BM_StructureConstraints(benchmark::State& state) {
  const oscillator::SectorShape shape{std::sqrt(2.0), std::sqrt(3.0), 1.0};
  for (auto _ : state) {
    for (int p = 0; p <= static_cast<int>(state.range(0)); ++p)
      benchmark::DoNotOptimize(
          oscillator::solve_constraints(models::Model::dso, shape, p));
  }
}
BENCHMARK(BM_StructureConstraints)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
