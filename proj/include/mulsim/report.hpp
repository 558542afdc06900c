#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mulsim/config.hpp"
#include "mulsim/netlist.hpp"

// Benchmark sweep: per (architecture, n) cell, the analytical cycle
// count, netlist cost proxies under identical seeded stimulus, and the
// published reference figures side by side. Ratio columns are always
// recomputed from the raw columns when a report is rendered.

namespace mulsim {

struct BenchRow {
  ArchKind arch{};
  std::size_t n = 0;
  std::uint64_t cycles = 0;  // analytical model (Table-style)
  double ge = 0.0;
  unsigned depth = 0;
  std::uint64_t toggles_total = 0;
  std::uint64_t products = 0;  // n * jobs
  std::optional<double> paper_area;
  std::optional<double> paper_power;

  double toggles_per_product() const {
    return products ? static_cast<double>(toggles_total) / products : 0.0;
  }
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Shift-add baseline per n, always computed for the ratio columns:
  // {gate equivalents, toggles per product}.
  std::map<std::size_t, std::pair<double, double>> baseline;
  std::uint64_t seed = 0;
  std::uint64_t jobs = 0;
};

// Cycles the netlist actually needs to finish one job (lanes run
// concurrently; sequential engines freeze when done).
std::uint64_t netlist_run_cycles(ArchKind arch, std::size_t n,
                                 const NibbleMode& mode);

BenchReport run_bench(const RunConfig& cfg);

std::string bench_csv(const BenchReport& report);
std::string bench_table(const BenchReport& report);

void write_file(const std::string& path, const std::string& text);

}  // namespace mulsim
