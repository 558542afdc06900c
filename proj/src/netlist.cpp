#include "mulsim/netlist.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulsim {

unsigned gate_num_inputs(GateKind k) {
  switch (k) {
    case GateKind::Inv:
    case GateKind::Dff: return 1;
    case GateKind::And2:
    case GateKind::Or2:
    case GateKind::Xor2:
    case GateKind::Nand2:
    case GateKind::Nor2:
    case GateKind::HalfAdder: return 2;
    case GateKind::Mux2:
    case GateKind::FullAdder: return 3;
  }
  throw std::invalid_argument("unknown GateKind");
}

unsigned gate_num_outputs(GateKind k) {
  return (k == GateKind::HalfAdder || k == GateKind::FullAdder) ? 2 : 1;
}

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::And2: return "and2";
    case GateKind::Or2: return "or2";
    case GateKind::Xor2: return "xor2";
    case GateKind::Nand2: return "nand2";
    case GateKind::Nor2: return "nor2";
    case GateKind::Inv: return "inv";
    case GateKind::Mux2: return "mux2";
    case GateKind::HalfAdder: return "ha";
    case GateKind::FullAdder: return "fa";
    case GateKind::Dff: return "dff";
  }
  throw std::invalid_argument("unknown GateKind");
}

double gate_weight(GateKind k) {
  switch (k) {
    case GateKind::Inv: return 0.5;
    case GateKind::Nand2:
    case GateKind::Nor2: return 1.0;
    case GateKind::And2:
    case GateKind::Or2: return 1.25;
    case GateKind::Xor2:
    case GateKind::Mux2: return 2.0;
    case GateKind::HalfAdder: return 2.5;
    case GateKind::FullAdder: return 4.5;
    case GateKind::Dff: return 4.0;
  }
  throw std::invalid_argument("unknown GateKind");
}

unsigned gate_levels(GateKind k) {
  return (k == GateKind::HalfAdder || k == GateKind::FullAdder) ? 2 : 1;
}

std::size_t Netlist::count_kind(GateKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(),
                    [k](const Gate& g) { return g.kind == k; }));
}

std::uint32_t Netlist::block_count(const std::string& block) const {
  for (const auto& [name, count] : blocks)
    if (name == block) return count;
  return 0;
}

void validate_netlist(const Netlist& nl) {
  std::vector<std::uint8_t> driven(nl.net_count, 0);
  auto drive = [&](NetId n) {
    if (n >= nl.net_count) throw std::runtime_error("net id out of range");
    if (driven[n]) throw std::runtime_error("net has multiple drivers");
    driven[n] = 1;
  };
  if (nl.const0 != kNoNet) drive(nl.const0);
  if (nl.const1 != kNoNet) drive(nl.const1);
  for (const Port& p : nl.inputs)
    for (NetId n : p.bits) drive(n);
  for (const Gate& g : nl.gates) {
    const unsigned nin = gate_num_inputs(g.kind);
    const unsigned nout = gate_num_outputs(g.kind);
    for (unsigned i = 0; i < nin; ++i)
      if (g.in[i] >= nl.net_count)
        throw std::runtime_error("gate input out of range");
    for (unsigned i = nin; i < 3; ++i)
      if (g.in[i] != kNoNet) throw std::runtime_error("gate arity mismatch");
    for (unsigned i = 0; i < nout; ++i) drive(g.out[i]);
    for (unsigned i = nout; i < 2; ++i)
      if (g.out[i] != kNoNet) throw std::runtime_error("gate arity mismatch");
  }
  for (const Port& p : nl.outputs)
    for (NetId n : p.bits)
      if (n >= nl.net_count || !driven[n])
        throw std::runtime_error("undriven output net");
}

double area_proxy(const Netlist& nl) {
  double ge = 0.0;
  for (const Gate& g : nl.gates) ge += gate_weight(g.kind);
  return ge;
}

namespace {

// Topological order of the combinational gates (DFF outputs are
// sources, DFF inputs are endpoints). Throws on a cycle.
std::vector<std::uint32_t> levelize(const Netlist& nl) {
  const std::uint32_t num_gates = static_cast<std::uint32_t>(nl.gates.size());
  // Driver gate per net; sources (PIs, constants, DFF outputs) have none.
  std::vector<std::uint32_t> driver(nl.net_count, kNoNet);
  for (std::uint32_t gi = 0; gi < num_gates; ++gi) {
    const Gate& g = nl.gates[gi];
    if (g.kind == GateKind::Dff) continue;
    for (unsigned o = 0; o < gate_num_outputs(g.kind); ++o)
      driver[g.out[o]] = gi;
  }

  std::vector<std::uint32_t> indegree(num_gates, 0);
  std::vector<std::vector<std::uint32_t>> consumers(num_gates);
  std::vector<std::uint32_t> ready;
  for (std::uint32_t gi = 0; gi < num_gates; ++gi) {
    const Gate& g = nl.gates[gi];
    if (g.kind == GateKind::Dff) continue;
    for (unsigned i = 0; i < gate_num_inputs(g.kind); ++i) {
      const std::uint32_t d = driver[g.in[i]];
      if (d != kNoNet) {
        ++indegree[gi];
        consumers[d].push_back(gi);
      }
    }
    if (indegree[gi] == 0) ready.push_back(gi);
  }

  std::vector<std::uint32_t> order;
  order.reserve(num_gates);
  for (std::size_t head = 0; head < ready.size(); ++head) {
    const std::uint32_t gi = ready[head];
    order.push_back(gi);
    for (std::uint32_t c : consumers[gi])
      if (--indegree[c] == 0) ready.push_back(c);
  }
  std::size_t comb_gates = 0;
  for (const Gate& g : nl.gates)
    if (g.kind != GateKind::Dff) ++comb_gates;
  if (order.size() != comb_gates)
    throw std::runtime_error("combinational cycle in netlist");
  return order;
}

}  // namespace

unsigned critical_depth(const Netlist& nl) {
  const std::vector<std::uint32_t> order = levelize(nl);
  std::vector<unsigned> level(nl.net_count, 0);
  unsigned depth = 0;
  for (std::uint32_t gi : order) {
    const Gate& g = nl.gates[gi];
    unsigned in_level = 0;
    for (unsigned i = 0; i < gate_num_inputs(g.kind); ++i)
      in_level = std::max(in_level, level[g.in[i]]);
    const unsigned out_level = in_level + gate_levels(g.kind);
    for (unsigned o = 0; o < gate_num_outputs(g.kind); ++o)
      level[g.out[o]] = out_level;
  }
  for (const Port& p : nl.outputs)
    for (NetId n : p.bits) depth = std::max(depth, level[n]);
  for (const Gate& g : nl.gates)
    if (g.kind == GateKind::Dff) depth = std::max(depth, level[g.in[0]]);
  return depth;
}

NetlistSim::NetlistSim(const Netlist& nl, bool count_toggles)
    : nl_(nl), count_toggles_(count_toggles) {
  validate_netlist(nl);
  order_ = levelize(nl);
  fanout_.assign(nl.net_count, 0);
  for (const Gate& g : nl.gates)
    for (unsigned i = 0; i < gate_num_inputs(g.kind); ++i) ++fanout_[g.in[i]];
  for (std::uint32_t gi = 0; gi < nl.gates.size(); ++gi)
    if (nl.gates[gi].kind == GateKind::Dff) dff_gates_.push_back(gi);
  input_vals_.assign(nl.inputs.size(), 0);
  reset();
}

void NetlistSim::reset() {
  value_.assign(nl_.net_count, 0);
  dff_state_.assign(dff_gates_.size(), 0);
  if (count_toggles_) transitions_.assign(nl_.net_count, 0);
  std::fill(input_vals_.begin(), input_vals_.end(), 0);
  toggles_total_ = 0;
  have_baseline_ = false;
}

void NetlistSim::clear_state() {
  std::fill(dff_state_.begin(), dff_state_.end(), 0);
}

void NetlistSim::set_input(std::size_t port_index, std::uint64_t value) {
  input_vals_[port_index] = value;
}

void NetlistSim::apply_sources() {
  if (nl_.const0 != kNoNet) value_[nl_.const0] = 0;
  if (nl_.const1 != kNoNet) value_[nl_.const1] = 1;
  for (std::size_t p = 0; p < nl_.inputs.size(); ++p) {
    const Port& port = nl_.inputs[p];
    for (std::size_t i = 0; i < port.bits.size(); ++i)
      value_[port.bits[i]] =
          static_cast<std::uint8_t>((input_vals_[p] >> i) & 1);
  }
  for (std::size_t d = 0; d < dff_gates_.size(); ++d)
    value_[nl_.gates[dff_gates_[d]].out[0]] = dff_state_[d];
}

void NetlistSim::eval() {
  const bool track = count_toggles_ && have_baseline_;
  if (track) prev_ = value_;

  apply_sources();
  for (std::uint32_t gi : order_) {
    const Gate& g = nl_.gates[gi];
    const auto v = [&](NetId n) { return value_[n]; };
    std::uint8_t o0 = 0, o1 = 0;
    switch (g.kind) {
      case GateKind::And2:  o0 = v(g.in[0]) & v(g.in[1]); break;
      case GateKind::Or2:   o0 = v(g.in[0]) | v(g.in[1]); break;
      case GateKind::Xor2:  o0 = v(g.in[0]) ^ v(g.in[1]); break;
      case GateKind::Nand2: o0 = !(v(g.in[0]) & v(g.in[1])); break;
      case GateKind::Nor2:  o0 = !(v(g.in[0]) | v(g.in[1])); break;
      case GateKind::Inv:   o0 = !v(g.in[0]); break;
      case GateKind::Mux2:  o0 = v(g.in[2]) ? v(g.in[1]) : v(g.in[0]); break;
      case GateKind::HalfAdder:
        o0 = v(g.in[0]) ^ v(g.in[1]);
        o1 = v(g.in[0]) & v(g.in[1]);
        break;
      case GateKind::FullAdder: {
        const std::uint8_t a = v(g.in[0]), b = v(g.in[1]), c = v(g.in[2]);
        o0 = a ^ b ^ c;
        o1 = (a & b) | (a & c) | (b & c);
        break;
      }
      case GateKind::Dff: continue;
    }
    value_[g.out[0]] = o0;
    if (gate_num_outputs(g.kind) == 2) value_[g.out[1]] = o1;
  }

  if (track) {
    for (NetId n = 0; n < nl_.net_count; ++n) {
      if (value_[n] != prev_[n]) {
        ++transitions_[n];
        toggles_total_ += 1 + fanout_[n];
      }
    }
  }
  have_baseline_ = true;
}

void NetlistSim::clock() {
  for (std::size_t d = 0; d < dff_gates_.size(); ++d)
    dff_state_[d] = value_[nl_.gates[dff_gates_[d]].in[0]];
}

std::uint64_t NetlistSim::output(std::size_t port_index) const {
  const Port& port = nl_.outputs[port_index];
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < port.bits.size(); ++i)
    v |= static_cast<std::uint64_t>(value_[port.bits[i]]) << i;
  return v;
}

std::uint64_t NetlistSim::net_transitions(NetId net) const {
  return net < transitions_.size() ? transitions_[net] : 0;
}

SimResult simulate_netlist(
    const Netlist& nl, const std::vector<std::vector<std::uint64_t>>& stimulus) {
  NetlistSim sim(nl);
  SimResult res;
  res.outputs.reserve(stimulus.size());
  for (const auto& vec : stimulus) {
    if (vec.size() != nl.inputs.size())
      throw std::invalid_argument("stimulus width mismatch");
    for (std::size_t p = 0; p < vec.size(); ++p) sim.set_input(p, vec[p]);
    sim.eval();
    std::vector<std::uint64_t> outs(nl.outputs.size());
    for (std::size_t p = 0; p < nl.outputs.size(); ++p) outs[p] = sim.output(p);
    res.outputs.push_back(std::move(outs));
    sim.clock();
  }
  res.toggles_total = sim.toggles_total();
  return res;
}

}  // namespace mulsim
