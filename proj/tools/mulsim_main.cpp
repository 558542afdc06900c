#include <fmt/format.h>

#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mulsim/config.hpp"
#include "mulsim/lut_array.hpp"
#include "mulsim/netlist_build.hpp"
#include "mulsim/report.hpp"
#include "mulsim/rng.hpp"
#include "mulsim/sweep.hpp"
#include "mulsim/trace.hpp"
#include "mulsim/verilog.hpp"

namespace {

using namespace mulsim;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliArgs {
  std::string config_path;
  std::string arch, n, mode, lanes, seed, stimulus, out;
};

void add_common_flags(CLI::App* cmd, CliArgs& args) {
  cmd->add_option("--config", args.config_path, "key=value config file");
  cmd->add_option("--arch", args.arch, "architectures, comma-separated");
  cmd->add_option("--n", args.n, "vector lengths, comma-separated");
  cmd->add_option("--mode", args.mode, "nibble mode: sequential|unrolled");
  cmd->add_option("--lanes", args.lanes, "nibble lane count");
  cmd->add_option("--seed", args.seed, "64-bit seed for random stimulus");
  cmd->add_option("--stimulus", args.stimulus,
                  "exhaustive or random:<count>");
  cmd->add_option("--out", args.out, "output path");
}

RunConfig build_config(const CliArgs& args) {
  RunConfig cfg = args.config_path.empty() ? RunConfig{}
                                           : parse_config_file(args.config_path);
  if (!args.arch.empty()) apply_config_entry(cfg, "arch", args.arch);
  if (!args.n.empty()) apply_config_entry(cfg, "n", args.n);
  if (!args.mode.empty()) apply_config_entry(cfg, "mode", args.mode);
  if (!args.lanes.empty()) apply_config_entry(cfg, "lanes", args.lanes);
  if (!args.seed.empty()) apply_config_entry(cfg, "seed", args.seed);
  if (!args.stimulus.empty()) apply_config_entry(cfg, "stimulus", args.stimulus);
  if (!args.out.empty()) apply_config_entry(cfg, "out", args.out);
  return cfg;
}

NibbleMode mode_for(const RunConfig& cfg, std::size_t n) {
  NibbleMode m = cfg.nibble_mode;
  if (m.lanes > n) m.lanes = static_cast<std::uint32_t>(n);
  return m;
}

int cmd_verify(const RunConfig& cfg) {
  std::string report;
  bool failed = false;
  auto note = [&](bool ok, const std::string& line) {
    failed |= !ok;
    const std::string full = fmt::format("{} {}\n", ok ? "ok  " : "FAIL", line);
    fmt::print("{}", full);
    report += full;
  };

  const bool exhaustive =
      cfg.stimulus.kind == StimulusSpec::Kind::Exhaustive;
  const std::uint64_t random_count =
      exhaustive ? 0 : cfg.stimulus.count;

  // Functional models against the oracle.
  for (ArchKind arch : cfg.archs) {
    if (exhaustive) {
      const std::uint64_t bad = functional_sweep(arch, true);
      note(bad == 0, fmt::format("{} functional: {}/65536 pairs match",
                                 arch_name(arch), 65536 - bad));
    } else {
      const std::uint64_t bad =
          functional_random_sweep(arch, cfg.seed, random_count, true);
      note(bad == 0, fmt::format("{} functional: {} random jobs, {} mismatches",
                                 arch_name(arch), random_count, bad));
    }
  }

  // Structural properties of the two proposed designs.
  {
    std::uint64_t bad = 0;
    for (unsigned b = 0; b < 16; ++b) {
      const ResString s =
          build_res_string(Nibble{static_cast<std::uint8_t>(b)});
      for (unsigned a = 0; a < 16; ++a)
        if (extract_slice(s, Nibble{static_cast<std::uint8_t>(a)}) != a * b)
          ++bad;
    }
    note(bad == 0, fmt::format("lut slices: {}/256 nibble pairs match",
                               256 - bad));
  }
  {
    std::uint64_t bad = 0, over_budget = 0;
    for (unsigned a = 0; a < 256; ++a) {
      for (unsigned nb = 0; nb < 16; ++nb) {
        std::uint32_t adds = 0;
        if (pl_counted(static_cast<std::uint8_t>(a),
                       Nibble{static_cast<std::uint8_t>(nb)}, adds) != a * nb)
          ++bad;
        if (adds > 3) ++over_budget;
      }
    }
    note(bad == 0 && over_budget == 0,
         fmt::format("pl: {}/4096 products match, {} over the 3-addition "
                     "budget",
                     4096 - bad, over_budget));
  }
  {
    SplitMix64 g = split_stream(cfg.seed, 0xB0);
    bool reuse_ok = true;
    for (std::size_t n : cfg.ns) {
      const VectorJob job = random_job(g, n);
      reuse_ok &= lut_array_multiply(job).lut_lookups == 2;
      reuse_ok &= nibble_multiply(job, mode_for(cfg, n)).b_decodes == 1;
    }
    note(reuse_ok, "broadcast reuse: 2 string lookups, 1 nibble decode per job");
  }
  {
    const std::uint64_t jobs = exhaustive ? 10000 : random_count;
    const std::uint64_t bad = mode_agreement_sweep(cfg.seed, jobs, true);
    note(bad == 0, fmt::format("nibble modes: {} jobs, {} disagreements",
                               jobs, bad));
  }

  // Gate-level netlists against the functional models.
  for (ArchKind arch : cfg.archs) {
    const NibbleMode mode = mode_for(cfg, 1);
    if (exhaustive) {
      const std::uint64_t bad = netlist_sweep(arch, true, mode);
      note(bad == 0, fmt::format("{} netlist: {}/65536 pairs match",
                                 arch_name(arch), 65536 - bad));
    } else {
      const std::uint64_t bad =
          netlist_random_sweep(arch, cfg.seed, random_count, true, mode);
      note(bad == 0, fmt::format("{} netlist: {} random cases, {} mismatches",
                                 arch_name(arch), random_count, bad));
    }
  }

  // Trace shapes (checked internally by the generator).
  for (ArchKind arch : cfg.archs) {
    SplitMix64 g = split_stream(cfg.seed, 0x77);
    const std::size_t n = cfg.ns.empty() ? 8 : cfg.ns.front();
    try {
      trace_job(arch, random_job(g, n),
                arch == ArchKind::Nibble ? mode_for(cfg, n) : NibbleMode{});
      note(true, fmt::format("{} trace shape: n={} schedule holds",
                             arch_name(arch), n));
    } catch (const std::exception& e) {
      note(false, fmt::format("{} trace shape: {}", arch_name(arch), e.what()));
    }
  }

  if (!cfg.out_path.empty()) write_file(cfg.out_path, report);
  fmt::print("{}\n", failed ? "verification FAILED" : "verification passed");
  return failed ? kExitVerifyFail : kExitOk;
}

int cmd_bench(RunConfig cfg) {
  if (cfg.stimulus.kind == StimulusSpec::Kind::Exhaustive) {
    // Toggle stimulus is job-based; bench always runs seeded random jobs.
    cfg.stimulus = {StimulusSpec::Kind::Random, 256};
    fmt::print("bench stimulus: random:256 (seed {})\n", cfg.seed);
  }
  const BenchReport report = run_bench(cfg);
  fmt::print("{}", bench_table(report));
  const std::string path =
      cfg.out_path.empty() ? "bench.csv" : cfg.out_path;
  write_file(path, bench_csv(report));
  fmt::print("csv written to {}\n", path);
  return kExitOk;
}

int cmd_trace(const RunConfig& cfg) {
  if (cfg.archs.size() != 1 || cfg.ns.size() != 1)
    throw std::invalid_argument("trace needs exactly one --arch and one --n");
  const ArchKind arch = cfg.archs[0];
  const std::size_t n = cfg.ns[0];
  SplitMix64 g = split_stream(cfg.seed, 0x7A);
  const VectorJob job = random_job(g, n);
  const CycleTrace trace =
      trace_job(arch, job, arch == ArchKind::Nibble ? mode_for(cfg, n)
                                                    : NibbleMode{});
  const std::string base =
      cfg.out_path.empty()
          ? fmt::format("trace_{}_n{}", arch_name(arch), n)
          : cfg.out_path;
  write_trace_csv(trace, base + ".csv");
  write_trace_vcd(trace, base + ".vcd");
  fmt::print("trace written to {0}.csv and {0}.vcd ({1} cycles, {2} records)\n",
             base, trace.total_cycles, trace.records.size());
  return kExitOk;
}

int cmd_emit(const RunConfig& cfg) {
  if (cfg.archs.size() != 1 || cfg.ns.size() != 1)
    throw std::invalid_argument("emit needs exactly one --arch and one --n");
  const ArchKind arch = cfg.archs[0];
  const std::size_t n = cfg.ns[0];
  const Netlist nl = build_netlist(arch, n, mode_for(cfg, n));
  const std::string text = emit_verilog(nl, nl.name);
  const std::string path =
      cfg.out_path.empty() ? nl.name + ".v" : cfg.out_path;
  write_file(path, text);
  fmt::print("verilog written to {} ({} gates, module {})\n", path,
             nl.gates.size(), nl.name);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-accurate workbench for nibble-decomposed vector "
               "multipliers and their baselines"};
  app.require_subcommand(1);

  CliArgs args;
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification campaigns");
  CLI::App* bench =
      app.add_subcommand("bench", "cost/latency sweep with paper reference "
                                  "columns");
  CLI::App* trace = app.add_subcommand("trace", "dump a cycle trace as "
                                                "CSV and VCD");
  CLI::App* emit = app.add_subcommand("emit", "emit structural Verilog");
  for (CLI::App* cmd : {verify, bench, trace, emit})
    add_common_flags(cmd, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig cfg = build_config(args);
    if (verify->parsed()) return cmd_verify(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    if (trace->parsed()) return cmd_trace(cfg);
    return cmd_emit(cfg);
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIo;
  }
}
