#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Fixed-width operand types, nibble decomposition, the wide-multiply
// oracle and the analytical cycle-latency model shared by every
// multiplier architecture in this workbench.

namespace mulsim {

// 4-bit unsigned digit. Two nibbles compose an 8-bit operand.
struct Nibble {
  std::uint8_t value = 0;  // invariant: value < 16
};

// 8-bit unsigned operand element; the type carries the range invariant.
using Operand8 = std::uint8_t;

// 16-bit product of two 8-bit operands (max 255*255 = 65025).
using Product16 = std::uint16_t;

// A vector of 8-bit A elements multiplied by one broadcast scalar B.
struct VectorJob {
  std::vector<Operand8> a_ops;  // length 1..64
  Operand8 b = 0;               // held constant for the job
};

constexpr std::size_t kMaxVectorLen = 64;

enum class ArchKind { ShiftAdd, Booth, Nibble, Wallace, LutArray };

constexpr ArchKind kAllArchKinds[] = {
    ArchKind::ShiftAdd, ArchKind::Booth, ArchKind::Nibble,
    ArchKind::Wallace, ArchKind::LutArray};

std::string arch_name(ArchKind arch);
ArchKind arch_from_name(const std::string& name);  // throws std::invalid_argument

// Ground-truth product used to check every architecture.
constexpr Product16 oracle_mul(Operand8 a, Operand8 b) {
  return static_cast<Product16>(static_cast<std::uint16_t>(a) * b);
}

constexpr Nibble lo_nibble(Operand8 x) {
  return Nibble{static_cast<std::uint8_t>(x & 0x0F)};
}
constexpr Nibble hi_nibble(Operand8 x) {
  return Nibble{static_cast<std::uint8_t>(x >> 4)};
}

struct NibblePair {
  Nibble lo;
  Nibble hi;
};

constexpr NibblePair split_nibbles(Operand8 x) {
  return NibblePair{lo_nibble(x), hi_nibble(x)};
}

// Cycles to finish one 8-bit operand (per-architecture, Table-style
// analytical model): ShiftAdd 8, Booth 4, Nibble 2, Wallace 1, LutArray 1.
std::uint64_t per_operand_cycles(ArchKind arch);

// Total cycles for an n-element vector job: 8n / 4n / 2n for the
// sequential kinds, 1 for the combinational ones. Rejects n = 0.
std::uint64_t vector_latency(ArchKind arch, std::size_t n);

bool is_sequential(ArchKind arch);

// Throws std::invalid_argument when the job violates its invariants
// (empty vector or more than kMaxVectorLen elements).
void validate_job(const VectorJob& job);

}  // namespace mulsim
