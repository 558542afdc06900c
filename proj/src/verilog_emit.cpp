#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

#include "mulsim/verilog.hpp"

namespace mulsim {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

constexpr const char* kPrimitiveHeader = R"(// Primitive library (two-state, single clock domain).

module and2 (input a, input b, output y);
  assign y = a & b;
endmodule

module or2 (input a, input b, output y);
  assign y = a | b;
endmodule

module xor2 (input a, input b, output y);
  assign y = a ^ b;
endmodule

module nand2 (input a, input b, output y);
  assign y = ~(a & b);
endmodule

module nor2 (input a, input b, output y);
  assign y = ~(a | b);
endmodule

module inv (input a, output y);
  assign y = ~a;
endmodule

module mux2 (input d0, input d1, input s, output y);
  assign y = s ? d1 : d0;
endmodule

module ha (input a, input b, output s, output c);
  assign s = a ^ b;
  assign c = a & b;
endmodule

module fa (input a, input b, input cin, output s, output c);
  assign s = a ^ b ^ cin;
  assign c = (a & b) | (a & cin) | (b & cin);
endmodule

module dff (input clk, input rst, input d, output reg q);
  always @(posedge clk) begin
    if (rst)
      q <= 1'b0;
    else
      q <= d;
  end
endmodule

)";

}  // namespace

std::string emit_verilog(const Netlist& nl, const std::string& module_name) {
  if (!valid_identifier(module_name))
    throw std::invalid_argument("emit_verilog: invalid module name '" +
                                module_name + "'");

  const bool clocked = nl.has_dffs();
  auto net = [](NetId n) { return fmt::format("n{}", n); };

  std::string out = kPrimitiveHeader;

  // Port list.
  std::vector<std::string> port_names;
  if (clocked) {
    port_names.push_back("clk");
    port_names.push_back("rst");
  }
  for (const Port& p : nl.inputs) port_names.push_back(p.name);
  for (const Port& p : nl.outputs) port_names.push_back(p.name);

  out += fmt::format("module {}", module_name);
  if (!port_names.empty())
    out += fmt::format(" ({})", fmt::join(port_names, ", "));
  out += ";\n";

  if (clocked) out += "  input clk;\n  input rst;\n";
  for (const Port& p : nl.inputs)
    out += fmt::format("  input [{}:0] {};\n", p.bits.size() - 1, p.name);
  for (const Port& p : nl.outputs)
    out += fmt::format("  output [{}:0] {};\n", p.bits.size() - 1, p.name);

  for (NetId n = 0; n < nl.net_count; ++n)
    out += fmt::format("  wire {};\n", net(n));

  if (nl.const0 != kNoNet)
    out += fmt::format("  assign {} = 1'b0;\n", net(nl.const0));
  if (nl.const1 != kNoNet)
    out += fmt::format("  assign {} = 1'b1;\n", net(nl.const1));

  for (const Port& p : nl.inputs)
    for (std::size_t i = 0; i < p.bits.size(); ++i)
      out += fmt::format("  assign {} = {}[{}];\n", net(p.bits[i]), p.name, i);

  for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
    const Gate& g = nl.gates[gi];
    const std::string iname = fmt::format("g{}", gi);
    switch (g.kind) {
      case GateKind::And2:
      case GateKind::Or2:
      case GateKind::Xor2:
      case GateKind::Nand2:
      case GateKind::Nor2:
        out += fmt::format("  {} {} (.a({}), .b({}), .y({}));\n",
                           gate_kind_name(g.kind), iname, net(g.in[0]),
                           net(g.in[1]), net(g.out[0]));
        break;
      case GateKind::Inv:
        out += fmt::format("  inv {} (.a({}), .y({}));\n", iname,
                           net(g.in[0]), net(g.out[0]));
        break;
      case GateKind::Mux2:
        out += fmt::format("  mux2 {} (.d0({}), .d1({}), .s({}), .y({}));\n",
                           iname, net(g.in[0]), net(g.in[1]), net(g.in[2]),
                           net(g.out[0]));
        break;
      case GateKind::HalfAdder:
        out += fmt::format("  ha {} (.a({}), .b({}), .s({}), .c({}));\n",
                           iname, net(g.in[0]), net(g.in[1]), net(g.out[0]),
                           net(g.out[1]));
        break;
      case GateKind::FullAdder:
        out += fmt::format(
            "  fa {} (.a({}), .b({}), .cin({}), .s({}), .c({}));\n", iname,
            net(g.in[0]), net(g.in[1]), net(g.in[2]), net(g.out[0]),
            net(g.out[1]));
        break;
      case GateKind::Dff:
        out += fmt::format(
            "  dff {} (.clk(clk), .rst(rst), .d({}), .q({}));\n", iname,
            net(g.in[0]), net(g.out[0]));
        break;
    }
  }

  for (const Port& p : nl.outputs)
    for (std::size_t i = 0; i < p.bits.size(); ++i)
      out += fmt::format("  assign {}[{}] = {};\n", p.name, i, net(p.bits[i]));

  out += "endmodule\n";
  return out;
}

}  // namespace mulsim
