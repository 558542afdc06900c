#pragma once

#include <optional>

#include "mulsim/arith.hpp"

// Published synthesis figures (TSMC 28 nm, 1 GHz, 1.05 V, FF corner)
// for the 4/8/16-operand configurations. Reference data only: the
// workbench reports its own desk-scale proxies next to these numbers
// and never claims to reproduce them.

namespace mulsim {

struct PaperEntry {
  std::optional<double> area_um2;
  std::optional<double> power_mw;
};

// Entries exist for n in {4, 8, 16}; anything else is empty.
PaperEntry paper_reference(ArchKind arch, std::size_t n);

}  // namespace mulsim
