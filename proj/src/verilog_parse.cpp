#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mulsim/verilog.hpp"

// Parser for the structural subset emit_verilog produces: primitive
// module definitions (skipped; their semantics are known), then one
// module of wire declarations, assigns and primitive instances.

namespace mulsim {

namespace {

struct Tokenizer {
  explicit Tokenizer(const std::string& text) : text_(text) {}

  std::string next() {
    skip_space();
    if (pos_ >= text_.size()) return {};
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
        c == '\'') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
            d == '\'')
          ++pos_;
        else
          break;
      }
      return text_.substr(start, pos_ - start);
    }
    ++pos_;
    return std::string(1, c);
  }

  std::string peek() {
    const std::size_t save = pos_;
    std::string t = next();
    pos_ = save;
    return t;
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  void expect(const std::string& t) {
    const std::string got = next();
    if (got != t)
      throw std::runtime_error("verilog parse: expected '" + t + "', got '" +
                               got + "'");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

const std::map<std::string, GateKind> kPrimitives = {
    {"and2", GateKind::And2},   {"or2", GateKind::Or2},
    {"xor2", GateKind::Xor2},   {"nand2", GateKind::Nand2},
    {"nor2", GateKind::Nor2},   {"inv", GateKind::Inv},
    {"mux2", GateKind::Mux2},   {"ha", GateKind::HalfAdder},
    {"fa", GateKind::FullAdder}, {"dff", GateKind::Dff},
};

// Input/output pin order per primitive, matching the library header.
struct PinMap {
  std::vector<std::string> ins;
  std::vector<std::string> outs;
};

const PinMap& pin_map(GateKind k) {
  static const std::map<GateKind, PinMap> maps = {
      {GateKind::And2, {{"a", "b"}, {"y"}}},
      {GateKind::Or2, {{"a", "b"}, {"y"}}},
      {GateKind::Xor2, {{"a", "b"}, {"y"}}},
      {GateKind::Nand2, {{"a", "b"}, {"y"}}},
      {GateKind::Nor2, {{"a", "b"}, {"y"}}},
      {GateKind::Inv, {{"a"}, {"y"}}},
      {GateKind::Mux2, {{"d0", "d1", "s"}, {"y"}}},
      {GateKind::HalfAdder, {{"a", "b"}, {"s", "c"}}},
      {GateKind::FullAdder, {{"a", "b", "cin"}, {"s", "c"}}},
      {GateKind::Dff, {{"d"}, {"q"}}},
  };
  return maps.at(k);
}

bool is_number(const std::string& t) {
  return !t.empty() && std::isdigit(static_cast<unsigned char>(t[0])) &&
         t.find('\'') == std::string::npos;
}

struct PortDecl {
  std::string name;
  std::size_t width = 1;
  bool is_input = true;
};

// A connection expression: a wire, a port bit select, a constant, or
// clk/rst (which the netlist models implicitly).
struct ConnExpr {
  enum Kind { Wire, PortBit, Const0, Const1, ClkRst } kind = Wire;
  std::string name;
  std::size_t index = 0;
};

ConnExpr parse_conn(Tokenizer& tok) {
  ConnExpr e;
  std::string t = tok.next();
  if (t == "1'b0") {
    e.kind = ConnExpr::Const0;
    return e;
  }
  if (t == "1'b1") {
    e.kind = ConnExpr::Const1;
    return e;
  }
  if (t == "clk" || t == "rst") {
    e.kind = ConnExpr::ClkRst;
    e.name = t;
    return e;
  }
  e.name = t;
  if (tok.peek() == "[") {
    tok.expect("[");
    const std::string idx = tok.next();
    if (!is_number(idx)) throw std::runtime_error("verilog parse: bad index");
    tok.expect("]");
    e.kind = ConnExpr::PortBit;
    e.index = static_cast<std::size_t>(std::stoul(idx));
  } else {
    e.kind = ConnExpr::Wire;
  }
  return e;
}

}  // namespace

Netlist parse_verilog(const std::string& text) {
  Tokenizer tok(text);
  Netlist nl;

  std::map<std::string, NetId> net_by_name;
  auto wire_net = [&](const std::string& name) -> NetId {
    auto it = net_by_name.find(name);
    if (it == net_by_name.end())
      throw std::runtime_error("verilog parse: unknown wire " + name);
    return it->second;
  };

  std::vector<PortDecl> decls;
  auto find_decl = [&](const std::string& name) -> PortDecl* {
    for (auto& d : decls)
      if (d.name == name) return &d;
    return nullptr;
  };

  // Port-bit nets get resolved after all assigns are read.
  std::map<std::string, std::vector<NetId>> port_bits;
  auto const_net = [&](bool one) -> NetId {
    NetId& slot = one ? nl.const1 : nl.const0;
    if (slot == kNoNet) slot = nl.net_count++;
    return slot;
  };
  auto resolve = [&](const ConnExpr& e) -> NetId {
    switch (e.kind) {
      case ConnExpr::Const0: return const_net(false);
      case ConnExpr::Const1: return const_net(true);
      case ConnExpr::Wire: return wire_net(e.name);
      case ConnExpr::PortBit: {
        const auto it = port_bits.find(e.name);
        if (it == port_bits.end() || e.index >= it->second.size() ||
            it->second[e.index] == kNoNet)
          throw std::runtime_error("verilog parse: unresolved port bit");
        return it->second[e.index];
      }
      case ConnExpr::ClkRst:
        throw std::runtime_error("verilog parse: clk/rst used as data");
    }
    throw std::runtime_error("verilog parse: bad connection");
  };

  bool parsed_main = false;
  while (!tok.done()) {
    tok.expect("module");
    const std::string mod_name = tok.next();
    if (kPrimitives.count(mod_name)) {
      // Known library cell: skip to endmodule.
      for (std::string t = tok.next(); t != "endmodule"; t = tok.next())
        if (t.empty())
          throw std::runtime_error("verilog parse: unterminated primitive");
      continue;
    }
    if (parsed_main)
      throw std::runtime_error("verilog parse: multiple non-primitive modules");
    parsed_main = true;
    nl.name = mod_name;

    // Header port list (names only).
    if (tok.peek() == "(") {
      tok.expect("(");
      while (tok.peek() != ")") {
        tok.next();
        if (tok.peek() == ",") tok.expect(",");
      }
      tok.expect(")");
    }
    tok.expect(";");

    // Body.
    struct PendingAssign {
      ConnExpr lhs, rhs;
    };
    std::vector<PendingAssign> assigns;
    struct PendingInst {
      GateKind kind;
      std::map<std::string, ConnExpr> conns;
    };
    std::vector<PendingInst> insts;

    for (std::string t = tok.next(); t != "endmodule"; t = tok.next()) {
      if (t.empty())
        throw std::runtime_error("verilog parse: unterminated module");
      if (t == "input" || t == "output") {
        PortDecl d;
        d.is_input = (t == "input");
        if (tok.peek() == "[") {
          tok.expect("[");
          const std::string msb = tok.next();
          tok.expect(":");
          const std::string lsb = tok.next();
          tok.expect("]");
          if (!is_number(msb) || lsb != "0")
            throw std::runtime_error("verilog parse: bad range");
          d.width = static_cast<std::size_t>(std::stoul(msb)) + 1;
        }
        d.name = tok.next();
        tok.expect(";");
        if (d.name == "clk" || d.name == "rst") continue;  // implicit
        decls.push_back(d);
        port_bits[d.name].assign(d.width, kNoNet);
      } else if (t == "wire") {
        const std::string name = tok.next();
        tok.expect(";");
        net_by_name[name] = nl.net_count++;
      } else if (t == "assign") {
        PendingAssign a;
        a.lhs = parse_conn(tok);
        tok.expect("=");
        a.rhs = parse_conn(tok);
        tok.expect(";");
        assigns.push_back(a);
      } else if (kPrimitives.count(t)) {
        PendingInst inst;
        inst.kind = kPrimitives.at(t);
        tok.next();  // instance name
        tok.expect("(");
        while (true) {
          tok.expect(".");
          const std::string pin = tok.next();
          tok.expect("(");
          inst.conns[pin] = parse_conn(tok);
          tok.expect(")");
          if (tok.peek() == ",") {
            tok.expect(",");
            continue;
          }
          break;
        }
        tok.expect(")");
        tok.expect(";");
        insts.push_back(std::move(inst));
      } else {
        throw std::runtime_error("verilog parse: unexpected token '" + t +
                                 "'");
      }
    }

    // Pass 1: input-binding assigns (wire = port[bit]) and constant
    // wires (wire = 1'b0/1).
    for (const auto& a : assigns) {
      if (a.lhs.kind != ConnExpr::Wire) continue;
      const NetId lhs_net = wire_net(a.lhs.name);
      if (a.rhs.kind == ConnExpr::Const0) {
        nl.const0 = lhs_net;
      } else if (a.rhs.kind == ConnExpr::Const1) {
        nl.const1 = lhs_net;
      } else if (a.rhs.kind == ConnExpr::PortBit) {
        const PortDecl* d = find_decl(a.rhs.name);
        if (!d || !d->is_input)
          throw std::runtime_error("verilog parse: bad input binding");
        port_bits[a.rhs.name][a.rhs.index] = lhs_net;
      } else {
        throw std::runtime_error("verilog parse: unsupported assign");
      }
    }

    // Instances.
    for (const auto& inst : insts) {
      Gate g;
      g.kind = inst.kind;
      const PinMap& pins = pin_map(inst.kind);
      for (std::size_t i = 0; i < pins.ins.size(); ++i)
        g.in[i] = resolve(inst.conns.at(pins.ins[i]));
      for (std::size_t o = 0; o < pins.outs.size(); ++o)
        g.out[o] = resolve(inst.conns.at(pins.outs[o]));
      nl.gates.push_back(g);
    }

    // Pass 2: output bindings (port[bit] = expr).
    for (const auto& a : assigns) {
      if (a.lhs.kind != ConnExpr::PortBit) continue;
      const PortDecl* d = find_decl(a.lhs.name);
      if (!d || d->is_input)
        throw std::runtime_error("verilog parse: bad output binding");
      port_bits[a.lhs.name][a.lhs.index] = resolve(a.rhs);
    }

    // Assemble ports in declaration order.
    for (const auto& d : decls) {
      Port p{d.name, port_bits[d.name]};
      for (NetId bit : p.bits)
        if (bit == kNoNet)
          throw std::runtime_error("verilog parse: unbound port bit in " +
                                   d.name);
      if (d.is_input)
        nl.inputs.push_back(std::move(p));
      else
        nl.outputs.push_back(std::move(p));
    }
  }

  if (!parsed_main)
    throw std::runtime_error("verilog parse: no top module found");
  validate_netlist(nl);
  return nl;
}

}  // namespace mulsim
