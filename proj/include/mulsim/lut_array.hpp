#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mulsim/arith.hpp"

// Single-cycle LUT-based array multiplier: a hex-string LUT indexed by
// the B nibbles stores precomputed result strings; each Lookup
// Multiplier (LM) extracts 8-bit slices from the two selected strings,
// aligns them with fixed shifts and accumulates two 16-bit products.
// LM blocks replicate for wider vectors; the two strings are selected
// once per job and shared by every block.

namespace mulsim {

// 120-bit precomputed result string for one B nibble b. Fifteen 8-bit
// slices; the slice for a = 1 occupies the least significant byte, so
// slice(a) = bits [8(a-1) .. 8a-1] = a*b.
struct ResString {
  std::array<std::uint8_t, 15> slices{};  // slices[a-1] = a*b

  // Raw bit access for structural checks (bit 0 = LSB of slice a=1).
  bool bit(unsigned idx) const {
    return (slices[idx / 8] >> (idx % 8)) & 1;
  }
};

ResString build_res_string(Nibble b);

// Returns slice a of s (a >= 1); a = 0 yields 0, mirroring the
// zero-initialized partials guarded by "A != 0" in the selection step.
std::uint8_t extract_slice(const ResString& s, Nibble a);

// 16 result strings indexed by nibble value; 16 x 120 bits = 240 bytes.
class HexLut {
 public:
  HexLut();

  // Product-path access; bumps the caller's job-local lookup counter.
  const ResString& lookup(Nibble b, std::uint32_t& lookup_counter) const {
    ++lookup_counter;
    return entries_[b.value];
  }

  // Uncounted access for tests and construction audits.
  const ResString& entry(Nibble b) const { return entries_[b.value]; }

  static constexpr std::size_t storage_bytes() { return 16 * 15; }

 private:
  std::array<ResString, 16> entries_;
};

// Shared process-wide table; immutable after construction.
const HexLut& hex_lut();

// One LM input: two packed 8-bit A elements (low byte = element 0) and
// the broadcast 8-bit B.
struct LmInput {
  std::uint16_t a16 = 0;
  Operand8 b = 0;
};

struct LmOutput {
  Product16 out1 = 0;  // low byte of a16 times b
  Product16 out2 = 0;  // high byte of a16 times b
};

// Standalone LM operation: selects the two result strings for inp.b
// from the LUT, then slices, shifts and accumulates.
LmOutput lm_multiply(const LmInput& inp, const HexLut& lut);

// Shared-string form used by the replicated array: the caller performed
// the two lookups once for the whole job.
LmOutput lm_multiply(const LmInput& inp, const ResString& rs0,
                     const ResString& rs1);

struct LutArrayRun {
  std::vector<Product16> products;
  std::uint64_t cycles = 1;        // combinational: one cycle for any N
  std::uint32_t lut_lookups = 0;   // exactly 2 per job
  std::uint32_t lm_blocks = 0;     // ceil(N/2)
};

// Multiplies every element of the job by the broadcast scalar using
// ceil(N/2) LM blocks. Odd N pads the last block's high byte with zero
// and discards its second output.
LutArrayRun lut_array_multiply(const VectorJob& job);

}  // namespace mulsim
