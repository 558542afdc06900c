#include "mulsim/arith.hpp"

#include <stdexcept>

namespace mulsim {

std::string arch_name(ArchKind arch) {
  switch (arch) {
    case ArchKind::ShiftAdd: return "shift_add";
    case ArchKind::Booth:    return "booth";
    case ArchKind::Nibble:   return "nibble";
    case ArchKind::Wallace:  return "wallace";
    case ArchKind::LutArray: return "lut_array";
  }
  throw std::invalid_argument("unknown ArchKind");
}

ArchKind arch_from_name(const std::string& name) {
  if (name == "shift_add" || name == "shift-add") return ArchKind::ShiftAdd;
  if (name == "booth") return ArchKind::Booth;
  if (name == "nibble") return ArchKind::Nibble;
  if (name == "wallace") return ArchKind::Wallace;
  if (name == "lut_array" || name == "lut-array" || name == "array")
    return ArchKind::LutArray;
  throw std::invalid_argument("unknown architecture name: " + name);
}

std::uint64_t per_operand_cycles(ArchKind arch) {
  switch (arch) {
    case ArchKind::ShiftAdd: return 8;
    case ArchKind::Booth:    return 4;
    case ArchKind::Nibble:   return 2;
    case ArchKind::Wallace:  return 1;
    case ArchKind::LutArray: return 1;
  }
  throw std::invalid_argument("unknown ArchKind");
}

bool is_sequential(ArchKind arch) {
  return arch == ArchKind::ShiftAdd || arch == ArchKind::Booth ||
         arch == ArchKind::Nibble;
}

std::uint64_t vector_latency(ArchKind arch, std::size_t n) {
  if (n == 0) throw std::invalid_argument("vector_latency: n must be >= 1");
  if (is_sequential(arch)) return per_operand_cycles(arch) * n;
  return 1;  // combinational: all elements in one cycle
}

void validate_job(const VectorJob& job) {
  if (job.a_ops.empty())
    throw std::invalid_argument("VectorJob: empty operand vector");
  if (job.a_ops.size() > kMaxVectorLen)
    throw std::invalid_argument("VectorJob: more than 64 elements");
}

}  // namespace mulsim
