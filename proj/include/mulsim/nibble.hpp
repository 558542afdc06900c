#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mulsim/arith.hpp"

// Precompute-reuse nibble multiplier: the broadcast scalar B is decoded
// into two nibbles once per job; each nibble selects a precompute-logic
// (PL) configuration that scales the current A element with fixed
// shifts and at most three additions. A sequential engine retires one
// nibble per cycle (two cycles per element); the unrolled mode
// evaluates both nibbles combinationally.

namespace mulsim {

// Shift-and-add decomposition selected by one B nibble: the nibble's
// set bits, ascending. Sum of 2^i over shifts equals the nibble.
struct PlConfig {
  Nibble nibble;
  std::vector<std::uint8_t> shifts;  // subset of {0,1,2,3}
};

// The sixteen precompute configurations, indexed by nibble value.
const std::array<PlConfig, 16>& pl_config_table();

// Scaled value a * n as the sum of shifted copies of a, one per set bit
// of n. Result fits 12 bits (max 255 * 15 = 3825).
std::uint16_t pl(Operand8 a, Nibble n);

// Same computation, counting the two-input additions performed.
std::uint16_t pl_counted(Operand8 a, Nibble n, std::uint32_t& additions);

enum class NibbleModeKind { Sequential, UnrolledNibbles };

struct NibbleMode {
  NibbleModeKind kind = NibbleModeKind::Sequential;
  std::uint32_t lanes = 1;
};

// What one clock cycle of the sequential engine did; feeds trace output.
struct NibbleStepInfo {
  std::uint64_t cycle = 0;        // 1-based cycle just completed
  std::uint32_t element = 0;
  std::uint8_t nibble_index = 0;  // 0 = low nibble, 1 = high nibble
  std::uint16_t acc = 0;          // accumulator after this cycle
  bool loaded_element = false;    // element register captured this cycle
  bool wrote_output = false;      // product committed this cycle
  Product16 output = 0;
};

// Nibble-serial engine for one lane (Algorithm-faithful cycle behavior:
// element load, per-nibble PL + shift + accumulate, output write every
// second cycle).
class NibbleEngine {
 public:
  explicit NibbleEngine(const VectorJob& job);

  bool finished() const { return finished_; }
  NibbleStepInfo step();  // throws std::logic_error when finished

  std::uint64_t cycle() const { return cycle_; }
  std::uint32_t element_index() const { return element_index_; }
  std::uint8_t nibble_index() const { return nibble_index_; }
  std::uint16_t acc() const { return acc_; }
  const std::vector<Product16>& outputs() const { return outputs_; }

  // Number of times the broadcast B was decoded into nibbles (1 per job).
  std::uint32_t decode_count() const { return decode_count_; }

 private:
  VectorJob job_;
  Nibble b_lo_, b_hi_;
  std::uint32_t decode_count_ = 0;
  std::uint32_t element_index_ = 0;
  std::uint8_t nibble_index_ = 0;
  std::uint16_t acc_ = 0;
  std::uint64_t cycle_ = 0;
  bool finished_ = false;
  std::vector<Product16> outputs_;
};

struct NibbleRun {
  std::vector<Product16> products;
  std::uint64_t cycles = 0;
  std::uint32_t b_decodes = 0;  // broadcast nibble decode count (1 per job)
};

// Runs the job in the requested mode. Sequential with one lane takes
// 2N cycles; unrolled takes N cycles per lane, one cycle with N lanes.
NibbleRun nibble_multiply(const VectorJob& job, const NibbleMode& mode);

std::uint64_t nibble_mode_cycles(const NibbleMode& mode, std::size_t n);

}  // namespace mulsim
