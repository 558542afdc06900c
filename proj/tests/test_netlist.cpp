#include <stdexcept>

#include "doctest.h"
#include "mulsim/netlist_build.hpp"
#include "mulsim/rng.hpp"
#include "mulsim/sweep.hpp"

using namespace mulsim;

namespace {

std::size_t bank_dff_count(const Netlist& nl, const std::string& prefix) {
  std::size_t banks = 0, dffs = 0;
  for (const RegBank& bank : nl.reg_banks) {
    if (bank.name.rfind(prefix, 0) == 0) {
      ++banks;
      dffs += bank.dffs.size();
    }
  }
  return banks ? dffs / banks : 0;
}

std::size_t bank_count(const Netlist& nl, const std::string& prefix) {
  std::size_t banks = 0;
  for (const RegBank& bank : nl.reg_banks)
    if (bank.name.rfind(prefix, 0) == 0) ++banks;
  return banks;
}

}  // namespace

TEST_CASE("area proxy weights") {
  NetBuilder empty("empty");
  CHECK(area_proxy(empty.take()) == 0.0);

  // Ten genuine FA gates weigh 45 gate equivalents.
  NetBuilder b("ten_fas");
  const Bus y = b.add_input("y", 3);
  Bus outs;
  NetId c = y[2];
  for (int i = 0; i < 10; ++i) {
    auto [s, cc] = b.full_adder(y[0], y[1], c);
    outs.push_back(s);
    c = cc;
  }
  b.add_output("o", outs);
  const Netlist nl = b.take();
  CHECK(nl.count_kind(GateKind::FullAdder) == 10);
  CHECK(area_proxy(nl) == 45.0);
}

TEST_CASE("critical depth counting") {
  NetBuilder b("inv1");
  const Bus x = b.add_input("x", 1);
  b.add_output("y", {b.inv(x[0])});
  CHECK(critical_depth(b.take()) == 1);

  // 8-bit ripple-carry adder built from FAs (carry-in is a real input
  // so no stage folds to a half adder): 8 FAs x 2 levels.
  NetBuilder r("ripple8");
  const Bus a = r.add_input("a", 8);
  const Bus bb = r.add_input("b", 8);
  const Bus cin = r.add_input("cin", 1);
  const Bus sum = r.adder(a, bb, 8, cin[0]);
  r.add_output("s", sum);
  const Netlist nl = r.take();
  CHECK(nl.count_kind(GateKind::FullAdder) == 8);
  CHECK(critical_depth(nl) == 16);
}

TEST_CASE("combinational cycle detected") {
  Netlist nl;
  nl.name = "cyclic";
  nl.net_count = 2;
  Gate g1{GateKind::Inv, {1, kNoNet, kNoNet}, {0, kNoNet}};
  Gate g2{GateKind::Inv, {0, kNoNet, kNoNet}, {1, kNoNet}};
  nl.gates = {g1, g2};
  CHECK_THROWS_AS(critical_depth(nl), std::runtime_error);
}

TEST_CASE("multiple drivers rejected") {
  Netlist nl;
  nl.net_count = 2;
  nl.inputs.push_back(Port{"x", {0}});
  Gate g1{GateKind::Inv, {0, kNoNet, kNoNet}, {1, kNoNet}};
  Gate g2{GateKind::Inv, {0, kNoNet, kNoNet}, {1, kNoNet}};
  nl.gates = {g1, g2};
  CHECK_THROWS_AS(validate_netlist(nl), std::runtime_error);
}

TEST_CASE("construction audits") {
  // Sequential nibble at N=1: a single 16-DFF accumulator bank.
  const Netlist nib = build_netlist(ArchKind::Nibble, 1);
  CHECK(bank_count(nib, "acc") == 1);
  CHECK(bank_dff_count(nib, "acc") == 16);
  CHECK(nib.block_count("nibble_lane") == 1);

  // Wallace at N=1: the partial-product layer is exactly 64 AND2.
  const Netlist wal = build_netlist(ArchKind::Wallace, 1);
  CHECK(wal.count_kind(GateKind::And2) == 64);
  CHECK(wal.dff_count() == 0);

  // One LM block for two elements; mux trees, no state.
  const Netlist lut = build_netlist(ArchKind::LutArray, 2);
  CHECK(lut.block_count("lm") == 1);
  CHECK(lut.block_count("res_string_cone") == 2);
  CHECK(lut.dff_count() == 0);
  CHECK(lut.count_kind(GateKind::Mux2) > 0);
}

TEST_CASE("netlists validate and build deterministically") {
  for (ArchKind arch : kAllArchKinds) {
    const Netlist a = build_netlist(arch, 3);
    const Netlist b = build_netlist(arch, 3);
    validate_netlist(a);
    REQUIRE(a.gates.size() == b.gates.size());
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
      REQUIRE(a.gates[i].kind == b.gates[i].kind);
      REQUIRE(a.gates[i].in == b.gates[i].in);
      REQUIRE(a.gates[i].out == b.gates[i].out);
    }
  }
}

TEST_CASE("unsupported build parameters rejected") {
  CHECK_THROWS_AS(build_netlist(ArchKind::Wallace, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_netlist(ArchKind::Wallace, 65), std::invalid_argument);
  CHECK_THROWS_AS(
      build_netlist(ArchKind::Nibble, 4, {NibbleModeKind::Sequential, 5}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_netlist(ArchKind::Nibble, 4, {NibbleModeKind::Sequential, 0}),
      std::invalid_argument);
}

TEST_CASE("toggle counting") {
  // Constant stimulus: no transitions after the first vector.
  const Netlist wal = build_netlist(ArchKind::Wallace, 1);
  std::vector<std::vector<std::uint64_t>> constant(5, {0x5A, 0x3C});
  CHECK(simulate_netlist(wal, constant).toggles_total == 0);

  // Single inverter driven 0,1,0,1: three output toggles.
  NetBuilder b("inv1");
  const Bus x = b.add_input("x", 1);
  const NetId y = b.inv(x[0]);
  b.add_output("y", {y});
  const Netlist nl = b.take();
  NetlistSim sim(nl);
  std::uint64_t expected[] = {1, 0, 1, 0};
  int idx = 0;
  for (std::uint64_t v : {0, 1, 0, 1}) {
    sim.set_input(0, v);
    sim.eval();
    CHECK(sim.output(0) == expected[idx++]);
    sim.clock();
  }
  CHECK(sim.net_transitions(y) == 3);
  // Weighted total: input net (fanout 1) and output net (fanout 0).
  CHECK(sim.toggles_total() == 3 * 2 + 3 * 1);
}

TEST_CASE("stimulus width mismatch rejected") {
  const Netlist wal = build_netlist(ArchKind::Wallace, 1);
  std::vector<std::vector<std::uint64_t>> bad(1, {1});
  CHECK_THROWS_AS(simulate_netlist(wal, bad), std::invalid_argument);
}

TEST_CASE("netlist equals functional model on sampled cases") {
  for (ArchKind arch : kAllArchKinds)
    CHECK(netlist_random_sweep(arch, 0xBEEF, 4096, false) == 0);
}

TEST_CASE("netlists honor vector jobs end to end") {
  SplitMix64 g(77);
  for (ArchKind arch : kAllArchKinds) {
    for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{8}}) {
      const VectorJob job = random_job(g, n);
      const Netlist nl = build_netlist(arch, n);
      const std::uint64_t cycles =
          arch == ArchKind::Nibble ? 2 * n : vector_latency(arch, 1);
      const auto products = run_job_on_netlist(nl, job, cycles);
      for (std::size_t i = 0; i < n; ++i)
        REQUIRE(products[i] == oracle_mul(job.a_ops[i], job.b));
    }
  }
}

TEST_CASE("gate equivalents scale monotonically with n") {
  for (ArchKind arch : kAllArchKinds) {
    double prev = 0.0;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{4},
                          std::size_t{8}, std::size_t{16}}) {
      const double ge = area_proxy(build_netlist(arch, n));
      CHECK(ge >= prev);
      prev = ge;
    }
  }
}

TEST_CASE("directional cost relations at n=16") {
  const double nib = area_proxy(build_netlist(ArchKind::Nibble, 16));
  const double wal = area_proxy(build_netlist(ArchKind::Wallace, 16));
  const double lut = area_proxy(build_netlist(ArchKind::LutArray, 16));
  CHECK(nib < wal);
  CHECK(wal < lut);

  const unsigned nib_depth = critical_depth(build_netlist(ArchKind::Nibble, 16));
  const unsigned lut_depth = critical_depth(build_netlist(ArchKind::LutArray, 16));
  CHECK(nib_depth < lut_depth);
}

TEST_CASE("nibble mode variants build and run") {
  SplitMix64 g(99);
  const VectorJob job = random_job(g, 8);
  struct Case {
    NibbleMode mode;
    std::uint64_t cycles;
  };
  const Case cases[] = {
      {{NibbleModeKind::Sequential, 1}, 16},
      {{NibbleModeKind::Sequential, 2}, 8},
      {{NibbleModeKind::UnrolledNibbles, 1}, 8},
      {{NibbleModeKind::UnrolledNibbles, 8}, 1},
  };
  for (const Case& c : cases) {
    const Netlist nl = build_netlist(ArchKind::Nibble, 8, c.mode);
    const auto products = run_job_on_netlist(nl, job, c.cycles);
    for (std::size_t i = 0; i < 8; ++i)
      REQUIRE(products[i] == oracle_mul(job.a_ops[i], job.b));
  }
}
