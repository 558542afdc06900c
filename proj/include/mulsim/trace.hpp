#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulsim/arith.hpp"
#include "mulsim/nibble.hpp"

// Per-cycle event logs of the cycle engines, exported as CSV and as
// VCD waveforms (1 ns per cycle tick). The trace generator checks the
// shape invariants before anything is written: the nibble-serial
// engine commits one product every second cycle, the combinational
// architectures commit everything in cycle 1.

namespace mulsim {

enum class TraceEvent : std::uint8_t { Load, Nibble0, Nibble1, WriteOutput };

const char* trace_event_name(TraceEvent e);

struct TraceRecord {
  std::uint64_t cycle = 0;  // 1-based
  std::uint32_t element = 0;
  TraceEvent event = TraceEvent::Load;
  std::uint32_t value = 0;
};

struct CycleTrace {
  ArchKind arch{};
  NibbleMode mode{};  // meaningful for ArchKind::Nibble only
  VectorJob job;
  std::uint64_t total_cycles = 0;
  std::vector<TraceRecord> records;
};

CycleTrace trace_job(ArchKind arch, const VectorJob& job,
                     const NibbleMode& mode = NibbleMode{});

// Throws std::runtime_error when the event timing does not match the
// architecture's schedule.
void check_trace_shape(const CycleTrace& trace);

std::string trace_csv(const CycleTrace& trace);
std::string trace_vcd(const CycleTrace& trace);

void write_trace_csv(const CycleTrace& trace, const std::string& path);
void write_trace_vcd(const CycleTrace& trace, const std::string& path);

}  // namespace mulsim
