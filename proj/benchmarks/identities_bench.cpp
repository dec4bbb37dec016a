#include <benchmark/benchmark.h>

#include "oscnum/chebyshev.hpp"
#include "oscnum/identities.hpp"

namespace {

const oscnum::SieveTable& shared_table() {
  static const auto table = oscnum::SieveTable::build(10000000);
  return table;
}

}  // namespace

static void BM_VerifyHarmonicFloat(benchmark::State& state) {
  const auto& table = shared_table();
  const double x = static_cast<double>(state.range(0));
  const auto s = oscnum::PowerParam::floating(1.0);
  for (auto _ : state) {
    auto report = oscnum::verify_harmonic_identity(x, s, table);
    benchmark::DoNotOptimize(report.residual);
  }
}
BENCHMARK(BM_VerifyHarmonicFloat)->RangeMultiplier(10)->Range(1000, 10000000)->Unit(benchmark::kMillisecond);

static void BM_VerifyHarmonicExact(benchmark::State& state) {
  const auto& table = shared_table();
  const double x = static_cast<double>(state.range(0));
  const auto s = oscnum::PowerParam::exact(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto report = oscnum::verify_harmonic_identity(x, s, table);
    benchmark::DoNotOptimize(report.residual);
  }
}
BENCHMARK(BM_VerifyHarmonicExact)->ArgsProduct({{100, 1000}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

static void BM_FloorIdentity(benchmark::State& state) {
  const auto& table = shared_table();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oscnum::floor_identity_sum(n, table));
}
BENCHMARK(BM_FloorIdentity)->RangeMultiplier(10)->Range(1000, 10000000);

static void BM_PsiConvolution(benchmark::State& state) {
  const auto& table = shared_table();
  static const oscnum::PsiTable psi_table(table);
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto reports = oscnum::verify_psi_convolution(x, table, psi_table);
    benchmark::DoNotOptimize(reports.front().residual);
  }
}
BENCHMARK(BM_PsiConvolution)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
