#pragma once

#include <string>

#include "mulsim/netlist.hpp"

namespace mulsim {

// Structural Verilog-2001 text: a fixed primitive library header
// (gates as assign-based modules, the DFF as an always-block with a
// single clock and synchronous reset) followed by one module
// instantiating it. Byte-identical output for identical inputs, LF
// line endings. Throws std::invalid_argument on a bad module name.
std::string emit_verilog(const Netlist& nl, const std::string& module_name);

// Re-parses text produced by emit_verilog into a netlist that
// simulates identically. Throws std::runtime_error on malformed text.
Netlist parse_verilog(const std::string& text);

}  // namespace mulsim
