// Throughput comparison of the verification kernels: serial reference
// vs OpenMP. Run with --benchmark_filter to pick a subset.

#include <benchmark/benchmark.h>

#include "mulsim/sweep.hpp"

using namespace mulsim;

namespace {

void bm_functional(benchmark::State& state, ArchKind arch, bool parallel) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(functional_sweep(arch, parallel));
  }
  state.SetItemsProcessed(state.iterations() * 65536);
}

void bm_netlist(benchmark::State& state, ArchKind arch, bool parallel) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(netlist_random_sweep(arch, 1, 8192, parallel));
  }
  state.SetItemsProcessed(state.iterations() * 8192);
}

void bm_mode_agreement(benchmark::State& state, bool parallel) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mode_agreement_sweep(1, 20000, parallel));
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}

}  // namespace

BENCHMARK_CAPTURE(bm_functional, nibble_serial, ArchKind::Nibble, false);
BENCHMARK_CAPTURE(bm_functional, nibble_omp, ArchKind::Nibble, true);
BENCHMARK_CAPTURE(bm_functional, lut_array_serial, ArchKind::LutArray, false);
BENCHMARK_CAPTURE(bm_functional, lut_array_omp, ArchKind::LutArray, true);
BENCHMARK_CAPTURE(bm_functional, wallace_serial, ArchKind::Wallace, false);
BENCHMARK_CAPTURE(bm_functional, wallace_omp, ArchKind::Wallace, true);

BENCHMARK_CAPTURE(bm_netlist, nibble_serial, ArchKind::Nibble, false);
BENCHMARK_CAPTURE(bm_netlist, nibble_omp, ArchKind::Nibble, true);
BENCHMARK_CAPTURE(bm_netlist, lut_array_serial, ArchKind::LutArray, false);
BENCHMARK_CAPTURE(bm_netlist, lut_array_omp, ArchKind::LutArray, true);

BENCHMARK_CAPTURE(bm_mode_agreement, serial, false);
BENCHMARK_CAPTURE(bm_mode_agreement, omp, true);

BENCHMARK_MAIN();
