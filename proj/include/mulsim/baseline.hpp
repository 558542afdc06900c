#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mulsim/arith.hpp"

// Reference architectures the paper compares against: sequential
// shift-add (one multiplier bit per cycle), radix-4 Booth (two bits per
// cycle) and a combinational Wallace tree with an explicit
// partial-product matrix and carry-save compressor layers.

namespace mulsim {

struct BaselineRun {
  std::vector<Product16> products;
  std::uint64_t cycles = 0;
};

// What one clock cycle of a sequential baseline engine did.
struct BaselineStepInfo {
  std::uint64_t cycle = 0;
  std::uint32_t element = 0;
  bool loaded_element = false;
  bool wrote_output = false;
  Product16 output = 0;
};

// Classic shift-add: 8 cycles per element, one multiplier bit retired
// per cycle.
class ShiftAddEngine {
 public:
  explicit ShiftAddEngine(const VectorJob& job);
  bool finished() const { return finished_; }
  BaselineStepInfo step();
  const std::vector<Product16>& outputs() const { return outputs_; }
  std::uint64_t cycle() const { return cycle_; }

 private:
  VectorJob job_;
  std::uint32_t element_index_ = 0;
  std::uint8_t bit_index_ = 0;      // 0..7
  std::uint8_t multiplier_bits_ = 0;  // remaining bits of b
  std::uint16_t acc_ = 0;
  std::uint64_t cycle_ = 0;
  bool finished_ = false;
  std::vector<Product16> outputs_;
};

// Radix-4 Booth recoding of an 8-bit unsigned multiplier: four digits
// in {-2..2} plus an unsigned-correction flag (the top bit's weight).
// Sum of digits[i]*4^i + 256*correction reconstructs b.
struct BoothDigits {
  std::array<std::int8_t, 4> digits{};
  bool correction = false;
};

BoothDigits booth_recode(std::uint8_t b);

// Radix-4 Booth engine: 4 cycles per element, signed 18-bit accumulator,
// unsigned correction folded into the final cycle.
class BoothEngine {
 public:
  explicit BoothEngine(const VectorJob& job);
  bool finished() const { return finished_; }
  BaselineStepInfo step();
  const std::vector<Product16>& outputs() const { return outputs_; }
  std::int32_t acc() const { return acc_; }

 private:
  VectorJob job_;
  BoothDigits digits_;
  std::uint32_t element_index_ = 0;
  std::uint8_t step_index_ = 0;  // 0..3
  std::int32_t acc_ = 0;         // fits 18 signed bits at every step
  std::uint64_t cycle_ = 0;
  bool finished_ = false;
  std::vector<Product16> outputs_;
};

// Row counts of the carry-save reduction, first entry the initial
// partial-product matrix: 8 -> 6 -> 4 -> 3 -> 2 for 8x8.
struct WallaceReduction {
  std::vector<std::size_t> stage_rows;
};

// Single 8x8 Wallace multiply through the explicit AND matrix and
// group-of-three compressor stages; optionally reports the schedule.
Product16 wallace_multiply_one(std::uint8_t a, std::uint8_t b,
                               WallaceReduction* reduction = nullptr);

BaselineRun shift_add_multiply(const VectorJob& job);  // 8N cycles
BaselineRun booth_multiply(const VectorJob& job);      // 4N cycles
BaselineRun wallace_multiply(const VectorJob& job);    // 1 cycle

}  // namespace mulsim
