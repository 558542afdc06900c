#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mulsim/arith.hpp"
#include "mulsim/netlist.hpp"
#include "mulsim/nibble.hpp"

namespace mulsim {

using Bus = std::vector<NetId>;  // LSB first

// Netlist construction helper. Gate emitters fold constants and
// duplicate inputs, so composing wide structures over padded buses
// produces the reduced logic directly.
class NetBuilder {
 public:
  explicit NetBuilder(std::string name);

  NetId new_net();
  NetId c0();
  NetId c1();
  bool is_const(NetId n) const;

  Bus add_input(const std::string& name, std::size_t width);
  void add_output(const std::string& name, const Bus& bits);

  NetId inv(NetId a);
  NetId and2(NetId a, NetId b);
  NetId or2(NetId a, NetId b);
  NetId xor2(NetId a, NetId b);
  NetId nand2(NetId a, NetId b);
  NetId nor2(NetId a, NetId b);
  NetId mux2(NetId d0, NetId d1, NetId sel);
  std::pair<NetId, NetId> half_adder(NetId a, NetId b);          // {sum, carry}
  std::pair<NetId, NetId> full_adder(NetId a, NetId b, NetId c); // {sum, carry}
  NetId dff(NetId d);
  NetId dff(NetId d, RegBank& bank);

  // Feedback registers: allocate the Q net first, bind D once the
  // combinational logic that reads Q exists.
  struct OpenDff {
    std::uint32_t gate = 0;
    NetId q = kNoNet;
  };
  OpenDff dff_open(RegBank& bank);
  void dff_bind(const OpenDff& d, NetId data);
  std::vector<OpenDff> dff_open_bus(std::size_t width, RegBank& bank);
  Bus bus_of(const std::vector<OpenDff>& dffs) const;
  void dff_bind_bus(const std::vector<OpenDff>& dffs, const Bus& data);

  RegBank& add_reg_bank(const std::string& name);
  void note_block(const std::string& name, std::uint32_t count = 1);

  // Bus helpers. Out-of-range bits read as constant zero.
  NetId bit(const Bus& bus, std::size_t i) const;
  Bus bus_and_bit(const Bus& bus, NetId en);
  Bus bus_mux(const Bus& d0, const Bus& d1, NetId sel);  // width = max
  Bus bus_shl(const Bus& bus, std::size_t amount);
  // Ripple-carry sum truncated/zero-extended to out_width.
  Bus adder(const Bus& x, const Bus& y, std::size_t out_width,
            NetId carry_in = kNoNet);
  // One-hot selection: OR over options of (onehot[k] AND option[k]).
  Bus onehot_select(const std::vector<Bus>& options, const Bus& onehot,
                    std::size_t out_width);
  NetId onehot_select_bit(const std::vector<NetId>& options,
                          const Bus& onehot);
  NetId or_tree(std::vector<NetId> terms);

  Netlist take() { return std::move(nl_); }
  const Netlist& peek() const { return nl_; }

 private:
  Netlist nl_;
  NetId const0_ = kNoNet;
  NetId const1_ = kNoNet;
  std::vector<NetId> inv_of_;  // inverter dedup, both directions

  std::uint32_t emit(GateKind kind, std::initializer_list<NetId> ins,
                     unsigned num_outs);
};

// Canonical netlists for the workbench. `n` is the vector length
// (1..64). The nibble builder honors the mode (sequential or unrolled,
// 1..n lanes); other architectures ignore it. Throws
// std::invalid_argument on unsupported combinations.
Netlist build_netlist(ArchKind arch, std::size_t n,
                      const NibbleMode& mode = NibbleMode{});

}  // namespace mulsim
