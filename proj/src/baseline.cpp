#include "mulsim/baseline.hpp"

#include <cassert>
#include <stdexcept>

namespace mulsim {

ShiftAddEngine::ShiftAddEngine(const VectorJob& job) : job_(job) {
  validate_job(job_);
  multiplier_bits_ = job_.b;
  outputs_.resize(job_.a_ops.size(), 0);
}

BaselineStepInfo ShiftAddEngine::step() {
  if (finished_) throw std::logic_error("ShiftAddEngine: step after finish");

  BaselineStepInfo info;
  info.element = element_index_;
  info.loaded_element = (bit_index_ == 0);
  if (bit_index_ == 0) {
    acc_ = 0;
    multiplier_bits_ = job_.b;
  }

  const std::uint8_t a = job_.a_ops[element_index_];
  if (multiplier_bits_ & 1)
    acc_ = static_cast<std::uint16_t>(acc_ + (a << bit_index_));
  multiplier_bits_ >>= 1;

  ++cycle_;
  info.cycle = cycle_;

  if (++bit_index_ == 8) {
    outputs_[element_index_] = acc_;
    info.wrote_output = true;
    info.output = acc_;
    bit_index_ = 0;
    if (++element_index_ == job_.a_ops.size()) finished_ = true;
  }
  return info;
}

BoothDigits booth_recode(std::uint8_t b) {
  BoothDigits d;
  int prev = 0;  // b[-1]
  for (int k = 0; k < 4; ++k) {
    const int b0 = (b >> (2 * k)) & 1;
    const int b1 = (b >> (2 * k + 1)) & 1;
    d.digits[k] = static_cast<std::int8_t>(prev + b0 - 2 * b1);
    prev = b1;
  }
  // With an unsigned multiplier the top bit carries weight +256, not
  // -128; the engine adds it back in the final cycle.
  d.correction = (b & 0x80) != 0;
  return d;
}

BoothEngine::BoothEngine(const VectorJob& job) : job_(job) {
  validate_job(job_);
  digits_ = booth_recode(job_.b);
  outputs_.resize(job_.a_ops.size(), 0);
}

BaselineStepInfo BoothEngine::step() {
  if (finished_) throw std::logic_error("BoothEngine: step after finish");

  BaselineStepInfo info;
  info.element = element_index_;
  info.loaded_element = (step_index_ == 0);
  if (step_index_ == 0) acc_ = 0;

  const std::int32_t a = job_.a_ops[element_index_];
  acc_ += digits_.digits[step_index_] * (a << (2 * step_index_));
  assert(acc_ > -(1 << 17) && acc_ < (1 << 17));

  ++cycle_;
  info.cycle = cycle_;

  if (++step_index_ == 4) {
    if (digits_.correction) acc_ += a << 8;
    const Product16 p = static_cast<Product16>(acc_ & 0xFFFF);
    outputs_[element_index_] = p;
    info.wrote_output = true;
    info.output = p;
    step_index_ = 0;
    if (++element_index_ == job_.a_ops.size()) finished_ = true;
  }
  return info;
}

Product16 wallace_multiply_one(std::uint8_t a, std::uint8_t b,
                               WallaceReduction* reduction) {
  // Partial-product matrix: row k holds a << k when bit k of b is set.
  std::vector<std::uint32_t> rows(8);
  for (int k = 0; k < 8; ++k)
    rows[k] = (b >> k) & 1 ? static_cast<std::uint32_t>(a) << k : 0;

  if (reduction) reduction->stage_rows = {rows.size()};

  // Carry-save stages: every group of three rows compresses to a sum
  // row and a carry row; leftovers pass through. Row counts follow the
  // fixed 8 -> 6 -> 4 -> 3 -> 2 schedule.
  while (rows.size() > 2) {
    std::vector<std::uint32_t> next;
    std::size_t i = 0;
    for (; i + 3 <= rows.size(); i += 3) {
      const std::uint32_t x = rows[i], y = rows[i + 1], z = rows[i + 2];
      next.push_back(x ^ y ^ z);
      next.push_back(((x & y) | (x & z) | (y & z)) << 1);
    }
    for (; i < rows.size(); ++i) next.push_back(rows[i]);
    rows = std::move(next);
    if (reduction) reduction->stage_rows.push_back(rows.size());
  }

  // Final carry-propagate addition of the two remaining rows.
  return static_cast<Product16>((rows[0] + rows[1]) & 0xFFFF);
}

BaselineRun shift_add_multiply(const VectorJob& job) {
  validate_job(job);
  ShiftAddEngine engine(job);
  while (!engine.finished()) engine.step();
  return {engine.outputs(), vector_latency(ArchKind::ShiftAdd,
                                           job.a_ops.size())};
}

BaselineRun booth_multiply(const VectorJob& job) {
  validate_job(job);
  BoothEngine engine(job);
  while (!engine.finished()) engine.step();
  return {engine.outputs(), vector_latency(ArchKind::Booth,
                                           job.a_ops.size())};
}

BaselineRun wallace_multiply(const VectorJob& job) {
  validate_job(job);
  BaselineRun run;
  run.products.reserve(job.a_ops.size());
  for (std::uint8_t a : job.a_ops)
    run.products.push_back(wallace_multiply_one(a, job.b));
  run.cycles = 1;
  return run;
}

}  // namespace mulsim
