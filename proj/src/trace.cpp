#include "mulsim/trace.hpp"

#include <fmt/format.h>

#include <fstream>
#include <stdexcept>

#include "mulsim/baseline.hpp"
#include "mulsim/lut_array.hpp"

namespace mulsim {

const char* trace_event_name(TraceEvent e) {
  switch (e) {
    case TraceEvent::Load: return "load";
    case TraceEvent::Nibble0: return "nibble0";
    case TraceEvent::Nibble1: return "nibble1";
    case TraceEvent::WriteOutput: return "write_output";
  }
  throw std::invalid_argument("unknown TraceEvent");
}

namespace {

void trace_nibble_lane(const VectorJob& slice, std::uint32_t elem_offset,
                       CycleTrace& trace) {
  NibbleEngine engine(slice);
  while (!engine.finished()) {
    const NibbleStepInfo info = engine.step();
    const std::uint32_t elem = elem_offset + info.element;
    if (info.loaded_element)
      trace.records.push_back({info.cycle, elem, TraceEvent::Load,
                               slice.a_ops[info.element]});
    trace.records.push_back(
        {info.cycle, elem,
         info.nibble_index == 0 ? TraceEvent::Nibble0 : TraceEvent::Nibble1,
         info.acc});
    if (info.wrote_output)
      trace.records.push_back(
          {info.cycle, elem, TraceEvent::WriteOutput, info.output});
  }
}

template <typename Engine>
void trace_sequential_baseline(const VectorJob& job, CycleTrace& trace) {
  Engine engine(job);
  while (!engine.finished()) {
    const BaselineStepInfo info = engine.step();
    if (info.loaded_element)
      trace.records.push_back(
          {info.cycle, info.element, TraceEvent::Load, job.a_ops[info.element]});
    if (info.wrote_output)
      trace.records.push_back(
          {info.cycle, info.element, TraceEvent::WriteOutput, info.output});
  }
}

}  // namespace

CycleTrace trace_job(ArchKind arch, const VectorJob& job,
                     const NibbleMode& mode) {
  validate_job(job);
  const std::size_t n = job.a_ops.size();

  CycleTrace trace;
  trace.arch = arch;
  trace.mode = mode;
  trace.job = job;

  switch (arch) {
    case ArchKind::Nibble: {
      if (mode.lanes == 0 || mode.lanes > n)
        throw std::invalid_argument("trace_job: lanes must be in 1..n");
      trace.total_cycles = nibble_mode_cycles(mode, n);
      if (mode.kind == NibbleModeKind::Sequential) {
        const std::size_t chunk = (n + mode.lanes - 1) / mode.lanes;
        for (std::size_t lo = 0; lo < n; lo += chunk) {
          const std::size_t hi = std::min(lo + chunk, n);
          VectorJob slice{{job.a_ops.begin() + lo, job.a_ops.begin() + hi},
                          job.b};
          trace_nibble_lane(slice, static_cast<std::uint32_t>(lo), trace);
        }
      } else {
        const NibbleRun run = nibble_multiply(job, mode);
        const std::size_t chunk = (n + mode.lanes - 1) / mode.lanes;
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t cycle = (i % chunk) + 1;
          trace.records.push_back({cycle, static_cast<std::uint32_t>(i),
                                   TraceEvent::Load, job.a_ops[i]});
          trace.records.push_back({cycle, static_cast<std::uint32_t>(i),
                                   TraceEvent::WriteOutput, run.products[i]});
        }
      }
      break;
    }
    case ArchKind::ShiftAdd:
      trace.total_cycles = vector_latency(arch, n);
      trace_sequential_baseline<ShiftAddEngine>(job, trace);
      break;
    case ArchKind::Booth:
      trace.total_cycles = vector_latency(arch, n);
      trace_sequential_baseline<BoothEngine>(job, trace);
      break;
    case ArchKind::Wallace: {
      trace.total_cycles = 1;
      const BaselineRun run = wallace_multiply(job);
      for (std::size_t i = 0; i < n; ++i) {
        trace.records.push_back(
            {1, static_cast<std::uint32_t>(i), TraceEvent::Load, job.a_ops[i]});
        trace.records.push_back({1, static_cast<std::uint32_t>(i),
                                 TraceEvent::WriteOutput, run.products[i]});
      }
      break;
    }
    case ArchKind::LutArray: {
      trace.total_cycles = 1;
      const LutArrayRun run = lut_array_multiply(job);
      for (std::size_t i = 0; i < n; ++i) {
        trace.records.push_back(
            {1, static_cast<std::uint32_t>(i), TraceEvent::Load, job.a_ops[i]});
        trace.records.push_back({1, static_cast<std::uint32_t>(i),
                                 TraceEvent::WriteOutput, run.products[i]});
      }
      break;
    }
  }

  check_trace_shape(trace);
  return trace;
}

void check_trace_shape(const CycleTrace& trace) {
  const std::size_t n = trace.job.a_ops.size();

  // Expected write cycle per element under the architecture's schedule.
  std::vector<std::uint64_t> expected(n, 0);
  switch (trace.arch) {
    case ArchKind::Wallace:
    case ArchKind::LutArray:
      for (std::size_t i = 0; i < n; ++i) expected[i] = 1;
      break;
    case ArchKind::ShiftAdd:
      for (std::size_t i = 0; i < n; ++i) expected[i] = 8 * (i + 1);
      break;
    case ArchKind::Booth:
      for (std::size_t i = 0; i < n; ++i) expected[i] = 4 * (i + 1);
      break;
    case ArchKind::Nibble: {
      const std::size_t chunk =
          (n + trace.mode.lanes - 1) / trace.mode.lanes;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t pos = i % chunk;  // position inside its lane
        expected[i] = trace.mode.kind == NibbleModeKind::Sequential
                          ? 2 * (pos + 1)
                          : pos + 1;
      }
      break;
    }
  }

  std::vector<std::uint64_t> seen(n, 0);
  for (const TraceRecord& r : trace.records) {
    if (r.element >= n)
      throw std::runtime_error("trace shape: element index out of range");
    if (r.event == TraceEvent::WriteOutput) {
      if (seen[r.element] != 0)
        throw std::runtime_error("trace shape: duplicate output write");
      seen[r.element] = r.cycle;
      if (r.value != oracle_mul(trace.job.a_ops[r.element], trace.job.b))
        throw std::runtime_error("trace shape: product mismatch");
    }
    if (r.cycle == 0 || r.cycle > trace.total_cycles)
      throw std::runtime_error("trace shape: cycle out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != expected[i])
      throw std::runtime_error(
          fmt::format("trace shape: element {} written at cycle {}, "
                      "schedule says {}",
                      i, seen[i], expected[i]));
}

std::string trace_csv(const CycleTrace& trace) {
  std::string out = "cycle,element,event,value\n";
  for (const TraceRecord& r : trace.records)
    out += fmt::format("{},{},{},{}\n", r.cycle, r.element,
                       trace_event_name(r.event), r.value);
  return out;
}

namespace {

void vcd_bits(std::string& out, std::uint32_t value, unsigned width,
              const char* id) {
  out += 'b';
  for (int i = static_cast<int>(width) - 1; i >= 0; --i)
    out += ((value >> i) & 1) ? '1' : '0';
  out += ' ';
  out += id;
  out += '\n';
}

}  // namespace

std::string trace_vcd(const CycleTrace& trace) {
  // Signals: broadcast b, currently selected element value and index,
  // accumulator (nibble engines), committed product, write strobe.
  std::string out;
  out += "$timescale 1ns $end\n";
  out += fmt::format("$scope module {} $end\n", arch_name(trace.arch));
  out += "$var wire 8 ! b $end\n";
  out += "$var wire 8 \" a_sel $end\n";
  out += "$var wire 7 # elem $end\n";
  out += "$var wire 16 $ acc $end\n";
  out += "$var wire 16 % product $end\n";
  out += "$var wire 1 & wr $end\n";
  out += "$upscope $end\n";
  out += "$enddefinitions $end\n";

  out += "#0\n";
  vcd_bits(out, trace.job.b, 8, "!");
  vcd_bits(out, 0, 8, "\"");
  vcd_bits(out, 0, 7, "#");
  vcd_bits(out, 0, 16, "$");
  vcd_bits(out, 0, 16, "%");
  out += "0&\n";

  bool wr_high = false;
  for (std::uint64_t cycle = 1; cycle <= trace.total_cycles; ++cycle) {
    std::string body;
    bool wr_now = false;
    for (const TraceRecord& r : trace.records) {
      if (r.cycle != cycle) continue;
      switch (r.event) {
        case TraceEvent::Load:
          vcd_bits(body, r.value, 8, "\"");
          vcd_bits(body, r.element, 7, "#");
          break;
        case TraceEvent::Nibble0:
        case TraceEvent::Nibble1:
          vcd_bits(body, r.value, 16, "$");
          break;
        case TraceEvent::WriteOutput:
          vcd_bits(body, r.value, 16, "%");
          wr_now = true;
          break;
      }
    }
    if (wr_now != wr_high) {
      body += wr_now ? "1&\n" : "0&\n";
      wr_high = wr_now;
    }
    if (!body.empty()) out += fmt::format("#{}\n{}", cycle, body);
  }
  out += fmt::format("#{}\n", trace.total_cycles + 1);
  if (wr_high) out += "0&\n";
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_trace_csv(const CycleTrace& trace, const std::string& path) {
  write_file(path, trace_csv(trace));
}

void write_trace_vcd(const CycleTrace& trace, const std::string& path) {
  write_file(path, trace_vcd(trace));
}

}  // namespace mulsim
