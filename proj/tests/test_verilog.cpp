#include <string>

#include <stdexcept>

#include "doctest.h"
#include "mulsim/netlist_build.hpp"
#include "mulsim/rng.hpp"
#include "mulsim/sweep.hpp"
#include "mulsim/verilog.hpp"

using namespace mulsim;

namespace {

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("empty netlist emits a legal module") {
  NetBuilder b("nothing");
  const Netlist nl = b.take();
  const std::string text = emit_verilog(nl, "nothing");
  CHECK(text.find("module nothing;") != std::string::npos);
  const Netlist back = parse_verilog(text);
  CHECK(back.gates.empty());
  CHECK(back.inputs.empty());
}

TEST_CASE("invalid module names rejected") {
  NetBuilder b("x");
  const Netlist nl = b.take();
  CHECK_THROWS_AS(emit_verilog(nl, "1bad"), std::invalid_argument);
  CHECK_THROWS_AS(emit_verilog(nl, "no-dash"), std::invalid_argument);
  CHECK_THROWS_AS(emit_verilog(nl, ""), std::invalid_argument);
}

TEST_CASE("wallace text instantiates exactly 64 and2") {
  const Netlist nl = build_netlist(ArchKind::Wallace, 1);
  const std::string text = emit_verilog(nl, "wallace_n1");
  CHECK(count_occurrences(text, "\n  and2 g") == 64);
}

TEST_CASE("emission is byte-deterministic") {
  const Netlist a = build_netlist(ArchKind::Nibble, 2);
  const Netlist b = build_netlist(ArchKind::Nibble, 2);
  CHECK(emit_verilog(a, "m") == emit_verilog(b, "m"));
}

TEST_CASE("clock ports only appear on clocked designs") {
  const std::string comb =
      emit_verilog(build_netlist(ArchKind::Wallace, 1), "w");
  CHECK(comb.find("input clk;") == std::string::npos);
  const std::string seq =
      emit_verilog(build_netlist(ArchKind::ShiftAdd, 1), "s");
  CHECK(seq.find("input clk;") != std::string::npos);
  CHECK(seq.find("input rst;") != std::string::npos);
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_verilog("wire w;"), std::runtime_error);
  CHECK_THROWS_AS(parse_verilog("module m; garbage x; endmodule"),
                  std::runtime_error);
}

TEST_CASE("round-trip simulation equals the functional model") {
  for (ArchKind arch : {ArchKind::Nibble, ArchKind::Wallace}) {
    const Netlist nl = build_netlist(arch, 1);
    const Netlist back = parse_verilog(emit_verilog(nl, "dut"));
    REQUIRE(back.gates.size() == nl.gates.size());
    const std::uint64_t cycles =
        arch == ArchKind::Nibble ? 2 : vector_latency(arch, 1);
    SplitMix64 g(0xD07);
    for (int i = 0; i < 2000; ++i) {
      const std::uint8_t a = static_cast<std::uint8_t>(g.next() & 0xFF);
      const std::uint8_t b = static_cast<std::uint8_t>(g.next() & 0xFF);
      const auto products =
          run_job_on_netlist(back, VectorJob{{a}, b}, cycles);
      REQUIRE(products[0] == oracle_mul(a, b));
    }
  }
}
