#pragma once

#include <cstdint>

#include "mulsim/arith.hpp"
#include "mulsim/netlist.hpp"
#include "mulsim/nibble.hpp"

// Verification campaigns as data-parallel kernels. Every kernel exists
// in an OpenMP-parallel form and a serial reference form selected by
// the `parallel` flag; both produce identical counts (results are
// accumulated per independent case). The benchmark target compares
// their throughput.

namespace mulsim {

// Functional model vs oracle over all 65,536 (a, b) pairs at N = 1.
// Returns the number of mismatching pairs.
std::uint64_t functional_sweep(ArchKind arch, bool parallel);

// Functional model vs oracle on seeded random jobs (vector lengths
// 1..64). Returns mismatching elements.
std::uint64_t functional_random_sweep(ArchKind arch, std::uint64_t seed,
                                      std::size_t jobs, bool parallel);

// Gate-level netlist at N = 1 vs the functional model over all 65,536
// pairs; sequential designs are stepped their full latency before the
// output is sampled. Returns mismatching pairs.
std::uint64_t netlist_sweep(ArchKind arch, bool parallel,
                            const NibbleMode& mode = NibbleMode{});

// Same check on a random subset of (a, b) pairs.
std::uint64_t netlist_random_sweep(ArchKind arch, std::uint64_t seed,
                                   std::size_t cases, bool parallel,
                                   const NibbleMode& mode = NibbleMode{});

// Nibble sequential vs unrolled product vectors on seeded random jobs.
// Returns the number of jobs whose vectors differ.
std::uint64_t mode_agreement_sweep(std::uint64_t seed, std::size_t jobs,
                                   bool parallel);

// Steps a job through a netlist built for its exact length: applies
// the operands, clocks the design `cycles` times, returns the product
// vector read from the output ports.
std::vector<Product16> run_job_on_netlist(const Netlist& nl,
                                          const VectorJob& job,
                                          std::uint64_t cycles);

}  // namespace mulsim
