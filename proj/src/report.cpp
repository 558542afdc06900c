#include "mulsim/report.hpp"

#include <fmt/format.h>

#include <fstream>
#include <stdexcept>

#include "mulsim/netlist_build.hpp"
#include "mulsim/paper_ref.hpp"
#include "mulsim/rng.hpp"

namespace mulsim {

std::uint64_t netlist_run_cycles(ArchKind arch, std::size_t n,
                                 const NibbleMode& mode) {
  switch (arch) {
    case ArchKind::ShiftAdd: return 8;  // replicated lanes, all parallel
    case ArchKind::Booth: return 4;
    case ArchKind::Wallace:
    case ArchKind::LutArray: return 1;
    case ArchKind::Nibble: return nibble_mode_cycles(mode, n);
  }
  throw std::invalid_argument("unknown ArchKind");
}

namespace {

struct CellResult {
  double ge = 0.0;
  unsigned depth = 0;
  std::uint64_t toggles_total = 0;
  std::uint64_t products = 0;
};

VectorJob stimulus_job(std::uint64_t seed, std::size_t n, std::uint64_t j) {
  SplitMix64 g = split_stream(seed, n * 0x10001ull + j);
  return random_job(g, n);
}

CellResult run_cell(ArchKind arch, std::size_t n, const NibbleMode& mode,
                    std::uint64_t seed, std::uint64_t jobs) {
  const Netlist nl = build_netlist(arch, n, mode);
  CellResult cell;
  cell.ge = area_proxy(nl);
  cell.depth = critical_depth(nl);

  const std::uint64_t cycles = netlist_run_cycles(arch, n, mode);
  NetlistSim sim(nl, /*count_toggles=*/true);
  for (std::uint64_t j = 0; j < jobs; ++j) {
    const VectorJob job = stimulus_job(seed, n, j);
    sim.clear_state();
    for (std::size_t i = 0; i < n; ++i) sim.set_input(i, job.a_ops[i]);
    sim.set_input(n, job.b);
    sim.eval();
    if (nl.has_dffs()) {
      for (std::uint64_t c = 0; c < cycles; ++c) {
        sim.clock();
        sim.eval();
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (sim.output(i) != oracle_mul(job.a_ops[i], job.b))
        throw std::runtime_error(
            fmt::format("bench: {} netlist disagrees with oracle at n={}",
                        arch_name(arch), n));
    }
  }
  cell.toggles_total = sim.toggles_total();
  cell.products = n * jobs;
  return cell;
}

}  // namespace

BenchReport run_bench(const RunConfig& cfg) {
  if (cfg.stimulus.kind != StimulusSpec::Kind::Random)
    throw std::invalid_argument("bench requires stimulus=random:<count>");

  BenchReport report;
  report.seed = cfg.seed;
  report.jobs = cfg.stimulus.count;

  // Cell list: requested archs plus the shift-add baseline per n.
  struct CellKey {
    ArchKind arch;
    std::size_t n;
    bool emit_row;
  };
  std::vector<CellKey> cells;
  for (std::size_t n : cfg.ns) {
    bool have_shiftadd = false;
    for (ArchKind arch : cfg.archs) {
      if (arch == ArchKind::ShiftAdd) have_shiftadd = true;
      cells.push_back({arch, n, true});
    }
    if (!have_shiftadd) cells.push_back({ArchKind::ShiftAdd, n, false});
  }

  // The nibble's lane count tracks n when not pinned explicitly; the
  // default (sequential, 1 lane) is the paper's single-datapath shape.
  auto nibble_mode_for = [&](std::size_t n) {
    NibbleMode m = cfg.nibble_mode;
    if (m.lanes > n) m.lanes = static_cast<std::uint32_t>(n);
    return m;
  };

  std::vector<CellResult> results(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
    const CellKey& key = cells[i];
    results[i] = run_cell(key.arch, key.n, nibble_mode_for(key.n), cfg.seed,
                          cfg.stimulus.count);
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CellKey& key = cells[i];
    const CellResult& cell = results[i];
    if (key.arch == ArchKind::ShiftAdd) {
      report.baseline[key.n] = {
          cell.ge, cell.products
                       ? static_cast<double>(cell.toggles_total) / cell.products
                       : 0.0};
    }
    if (!key.emit_row) continue;
    BenchRow row;
    row.arch = key.arch;
    row.n = key.n;
    row.cycles = key.arch == ArchKind::Nibble
                     ? nibble_mode_cycles(nibble_mode_for(key.n), key.n)
                     : vector_latency(key.arch, key.n);
    row.ge = cell.ge;
    row.depth = cell.depth;
    row.toggles_total = cell.toggles_total;
    row.products = cell.products;
    const PaperEntry paper = paper_reference(key.arch, key.n);
    row.paper_area = paper.area_um2;
    row.paper_power = paper.power_mw;
    report.rows.push_back(row);
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::string out =
      "arch,n,cycles,ge,depth,toggles_per_product,paper_area_um2,"
      "paper_power_mw,area_ratio_vs_shiftadd,power_proxy_ratio_vs_shiftadd\n";
  for (const BenchRow& row : report.rows) {
    const auto base = report.baseline.at(row.n);
    const double tpp = row.toggles_per_product();
    // Improvement factors, baseline / design, as in the paper's
    // normalized comparison.
    const double area_ratio = row.ge > 0 ? base.first / row.ge : 0.0;
    const double power_ratio = tpp > 0 ? base.second / tpp : 0.0;
    out += fmt::format(
        "{},{},{},{:.2f},{},{:.4f},{},{},{:.4f},{:.4f}\n",
        arch_name(row.arch), row.n, row.cycles, row.ge, row.depth, tpp,
        row.paper_area ? fmt::format("{:.2f}", *row.paper_area) : "",
        row.paper_power ? fmt::format("{:.4f}", *row.paper_power) : "",
        area_ratio, power_ratio);
  }
  return out;
}

std::string bench_table(const BenchReport& report) {
  std::string out = fmt::format(
      "benchmark sweep (seed={}, jobs={} per cell; ratios are "
      "shift-add baseline / design)\n",
      report.seed, report.jobs);
  out += fmt::format("{:<10} {:>4} {:>7} {:>10} {:>6} {:>10} {:>12} {:>12} "
                     "{:>10} {:>10}\n",
                     "arch", "n", "cycles", "ge", "depth", "tog/prod",
                     "paper.um2", "paper.mw", "area.x", "power.x");
  for (const BenchRow& row : report.rows) {
    const auto base = report.baseline.at(row.n);
    const double tpp = row.toggles_per_product();
    out += fmt::format(
        "{:<10} {:>4} {:>7} {:>10.2f} {:>6} {:>10.2f} {:>12} {:>12} "
        "{:>10.3f} {:>10.3f}\n",
        arch_name(row.arch), row.n, row.cycles, row.ge, row.depth, tpp,
        row.paper_area ? fmt::format("{:.2f}", *row.paper_area) : "-",
        row.paper_power ? fmt::format("{:.4f}", *row.paper_power) : "-",
        row.ge > 0 ? base.first / row.ge : 0.0,
        tpp > 0 ? base.second / tpp : 0.0);
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace mulsim
