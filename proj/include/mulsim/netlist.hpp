#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Structural gate-level netlists for the five architectures plus the
// desk-scale synthesis proxies: gate-equivalent area, critical-path
// depth in gate levels, and a fanout-weighted toggle count from
// zero-delay two-valued simulation.

namespace mulsim {

enum class GateKind : std::uint8_t {
  And2, Or2, Xor2, Nand2, Nor2, Inv, Mux2, HalfAdder, FullAdder, Dff
};

using NetId = std::uint32_t;
inline constexpr NetId kNoNet = 0xFFFFFFFFu;

// Mux2 inputs: {d0, d1, sel}; FullAdder inputs: {a, b, cin}.
// HalfAdder/FullAdder outputs: {sum, carry}; Dff: in d, out q (clock
// and synchronous reset are implicit and global).
struct Gate {
  GateKind kind{};
  std::array<NetId, 3> in{kNoNet, kNoNet, kNoNet};
  std::array<NetId, 2> out{kNoNet, kNoNet};
};

unsigned gate_num_inputs(GateKind k);
unsigned gate_num_outputs(GateKind k);
const char* gate_kind_name(GateKind k);

// Relative standard-cell sizes (unitless gate equivalents).
double gate_weight(GateKind k);

// Combinational levels a path gains crossing this gate (HA/FA count 2).
unsigned gate_levels(GateKind k);

struct Port {
  std::string name;
  std::vector<NetId> bits;  // bits[0] = LSB
};

// Register bank bookkeeping for construction audits (gate indices of
// the bank's DFFs).
struct RegBank {
  std::string name;
  std::vector<std::uint32_t> dffs;
};

struct Netlist {
  std::string name;
  std::uint32_t net_count = 0;
  NetId const0 = kNoNet;  // kNoNet when the design never uses it
  NetId const1 = kNoNet;
  std::vector<Gate> gates;
  std::vector<Port> inputs;
  std::vector<Port> outputs;
  std::vector<RegBank> reg_banks;
  std::vector<std::pair<std::string, std::uint32_t>> blocks;  // audit counters

  std::size_t count_kind(GateKind k) const;
  std::size_t dff_count() const { return count_kind(GateKind::Dff); }
  std::uint32_t block_count(const std::string& block) const;
  bool has_dffs() const { return dff_count() != 0; }
};

// Structural checks: arities, net ranges, single driver per net.
// Throws std::runtime_error on violation.
void validate_netlist(const Netlist& nl);

// Weighted gate count (gate equivalents).
double area_proxy(const Netlist& nl);

// Longest combinational path, in gate levels, from any source (primary
// input, constant, DFF output) to any endpoint (primary output or DFF
// data input). Throws std::runtime_error on a combinational cycle.
unsigned critical_depth(const Netlist& nl);

// Zero-delay two-valued cycle simulator. Per stimulus vector: apply
// inputs, settle combinational logic, sample outputs, then clock the
// DFFs. Net transitions are counted between consecutive settled states
// (the first evaluation is the baseline).
class NetlistSim {
 public:
  // Levelizes the combinational subgraph; throws on a cycle. Toggle
  // counting can be disabled for pure equivalence sweeps.
  explicit NetlistSim(const Netlist& nl, bool count_toggles = true);

  void reset();
  // Zeroes register state only (a synchronous reset pulse between
  // jobs); toggle statistics keep accumulating.
  void clear_state();
  void set_input(std::size_t port_index, std::uint64_t value);
  void eval();
  void clock();
  std::uint64_t output(std::size_t port_index) const;

  std::uint64_t net_transitions(NetId net) const;
  // Sum over nets of transitions * (1 + fanout).
  std::uint64_t toggles_total() const { return toggles_total_; }
  std::uint32_t fanout(NetId net) const { return fanout_[net]; }

 private:
  const Netlist& nl_;
  bool count_toggles_ = true;
  std::vector<std::uint32_t> order_;       // gate evaluation order
  std::vector<std::uint32_t> fanout_;
  std::vector<std::uint8_t> value_;        // per net
  std::vector<std::uint8_t> prev_;         // previous settled state
  std::vector<std::uint8_t> dff_state_;    // per DFF gate (in gate order)
  std::vector<std::uint32_t> dff_gates_;
  std::vector<std::uint64_t> input_vals_;  // per input port
  std::vector<std::uint64_t> transitions_;
  std::uint64_t toggles_total_ = 0;
  bool have_baseline_ = false;

  void apply_sources();
};

struct SimResult {
  // outputs[t][k] = value of output port k after stimulus vector t.
  std::vector<std::vector<std::uint64_t>> outputs;
  std::uint64_t toggles_total = 0;
};

// stimulus[t][k] = value driven on input port k during cycle t.
SimResult simulate_netlist(const Netlist& nl,
                           const std::vector<std::vector<std::uint64_t>>& stimulus);

struct CostReport {
  double gate_equivalents = 0.0;
  unsigned depth = 0;
  std::uint64_t toggles_total = 0;
  double toggles_per_product = 0.0;
  std::uint64_t cycles = 0;
};

}  // namespace mulsim
