#include "mulsim/sweep.hpp"

#include <cstdint>

#include "mulsim/baseline.hpp"
#include "mulsim/lut_array.hpp"
#include "mulsim/netlist_build.hpp"
#include "mulsim/rng.hpp"

namespace mulsim {

namespace {

std::vector<Product16> functional_products(ArchKind arch,
                                           const VectorJob& job) {
  switch (arch) {
    case ArchKind::ShiftAdd: return shift_add_multiply(job).products;
    case ArchKind::Booth: return booth_multiply(job).products;
    case ArchKind::Wallace: return wallace_multiply(job).products;
    case ArchKind::Nibble:
      return nibble_multiply(job, NibbleMode{}).products;
    case ArchKind::LutArray: return lut_array_multiply(job).products;
  }
  return {};
}

std::uint64_t oracle_mismatches(ArchKind arch, const VectorJob& job) {
  const std::vector<Product16> got = functional_products(arch, job);
  std::uint64_t bad = 0;
  for (std::size_t i = 0; i < job.a_ops.size(); ++i)
    if (got[i] != oracle_mul(job.a_ops[i], job.b)) ++bad;
  return bad;
}

}  // namespace

std::uint64_t functional_sweep(ArchKind arch, bool parallel) {
  std::uint64_t mismatches = 0;
#pragma omp parallel for schedule(static) reduction(+ : mismatches) \
    if (parallel)
  for (int b = 0; b < 256; ++b) {
    for (int a = 0; a < 256; ++a) {
      VectorJob job{{static_cast<std::uint8_t>(a)},
                    static_cast<std::uint8_t>(b)};
      mismatches += oracle_mismatches(arch, job);
    }
  }
  return mismatches;
}

std::uint64_t functional_random_sweep(ArchKind arch, std::uint64_t seed,
                                      std::size_t jobs, bool parallel) {
  std::uint64_t mismatches = 0;
  const std::int64_t count = static_cast<std::int64_t>(jobs);
#pragma omp parallel for schedule(static) reduction(+ : mismatches) \
    if (parallel)
  for (std::int64_t j = 0; j < count; ++j) {
    SplitMix64 g = split_stream(seed, static_cast<std::uint64_t>(j));
    mismatches += oracle_mismatches(arch, random_job_any_len(g));
  }
  return mismatches;
}

std::vector<Product16> run_job_on_netlist(const Netlist& nl,
                                          const VectorJob& job,
                                          std::uint64_t cycles) {
  NetlistSim sim(nl, /*count_toggles=*/false);
  const std::size_t n = job.a_ops.size();
  for (std::size_t i = 0; i < n; ++i) sim.set_input(i, job.a_ops[i]);
  sim.set_input(n, job.b);
  sim.eval();
  if (nl.has_dffs()) {
    for (std::uint64_t c = 0; c < cycles; ++c) {
      sim.clock();
      sim.eval();
    }
  }
  std::vector<Product16> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<Product16>(sim.output(i));
  return out;
}

namespace {

// Exhaustive or random (a, b) sweep through the N = 1 netlist. One
// simulator instance per thread, reset between cases.
std::uint64_t netlist_case_sweep(ArchKind arch, const NibbleMode& mode,
                                 bool parallel, bool exhaustive,
                                 std::uint64_t seed, std::size_t cases) {
  const Netlist nl = build_netlist(arch, 1, mode);
  const std::uint64_t cycles = arch == ArchKind::Nibble
                                   ? nibble_mode_cycles(mode, 1)
                                   : vector_latency(arch, 1);
  const bool clocked = nl.has_dffs();

  std::uint64_t mismatches = 0;
  const std::int64_t outer = exhaustive ? 256 : static_cast<std::int64_t>(cases);

#pragma omp parallel if (parallel)
  {
    NetlistSim sim(nl, /*count_toggles=*/false);
#pragma omp for schedule(static) reduction(+ : mismatches)
    for (std::int64_t idx = 0; idx < outer; ++idx) {
      if (exhaustive) {
        const std::uint8_t b = static_cast<std::uint8_t>(idx);
        for (int a = 0; a < 256; ++a) {
          sim.reset();
          sim.set_input(0, static_cast<std::uint64_t>(a));
          sim.set_input(1, b);
          sim.eval();
          if (clocked) {
            for (std::uint64_t c = 0; c < cycles; ++c) {
              sim.clock();
              sim.eval();
            }
          }
          if (sim.output(0) != oracle_mul(static_cast<std::uint8_t>(a), b))
            ++mismatches;
        }
      } else {
        SplitMix64 g = split_stream(seed, static_cast<std::uint64_t>(idx));
        const std::uint8_t a = static_cast<std::uint8_t>(g.next() & 0xFF);
        const std::uint8_t b = static_cast<std::uint8_t>(g.next() & 0xFF);
        sim.reset();
        sim.set_input(0, a);
        sim.set_input(1, b);
        sim.eval();
        if (clocked) {
          for (std::uint64_t c = 0; c < cycles; ++c) {
            sim.clock();
            sim.eval();
          }
        }
        if (sim.output(0) != oracle_mul(a, b)) ++mismatches;
      }
    }
  }
  return mismatches;
}

}  // namespace

std::uint64_t netlist_sweep(ArchKind arch, bool parallel,
                            const NibbleMode& mode) {
  return netlist_case_sweep(arch, mode, parallel, /*exhaustive=*/true, 0, 0);
}

std::uint64_t netlist_random_sweep(ArchKind arch, std::uint64_t seed,
                                   std::size_t cases, bool parallel,
                                   const NibbleMode& mode) {
  return netlist_case_sweep(arch, mode, parallel, /*exhaustive=*/false, seed,
                            cases);
}

std::uint64_t mode_agreement_sweep(std::uint64_t seed, std::size_t jobs,
                                   bool parallel) {
  std::uint64_t disagreements = 0;
  const std::int64_t count = static_cast<std::int64_t>(jobs);
#pragma omp parallel for schedule(static) reduction(+ : disagreements) \
    if (parallel)
  for (std::int64_t j = 0; j < count; ++j) {
    SplitMix64 g = split_stream(seed, static_cast<std::uint64_t>(j));
    const VectorJob job = random_job_any_len(g);
    const NibbleRun seq =
        nibble_multiply(job, {NibbleModeKind::Sequential, 1});
    const NibbleRun unrolled =
        nibble_multiply(job, {NibbleModeKind::UnrolledNibbles, 1});
    if (seq.products != unrolled.products) ++disagreements;
  }
  return disagreements;
}

}  // namespace mulsim
