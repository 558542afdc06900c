#include "mulsim/nibble.hpp"

#include <stdexcept>

namespace mulsim {

const std::array<PlConfig, 16>& pl_config_table() {
  static const std::array<PlConfig, 16> table = [] {
    std::array<PlConfig, 16> t;
    for (std::uint8_t n = 0; n < 16; ++n) {
      t[n].nibble = Nibble{n};
      for (std::uint8_t i = 0; i < 4; ++i)
        if (n & (1u << i)) t[n].shifts.push_back(i);
    }
    return t;
  }();
  return table;
}

std::uint16_t pl_counted(Operand8 a, Nibble n, std::uint32_t& additions) {
  const PlConfig& cfg = pl_config_table()[n.value];
  if (cfg.shifts.empty()) return 0;
  std::uint16_t acc = static_cast<std::uint16_t>(a << cfg.shifts[0]);
  for (std::size_t i = 1; i < cfg.shifts.size(); ++i) {
    acc = static_cast<std::uint16_t>(acc + (a << cfg.shifts[i]));
    ++additions;
  }
  return acc;
}

std::uint16_t pl(Operand8 a, Nibble n) {
  std::uint32_t adds = 0;
  return pl_counted(a, n, adds);
}

NibbleEngine::NibbleEngine(const VectorJob& job) : job_(job) {
  validate_job(job_);
  // Broadcast decode happens once; both nibbles are reused by every
  // element of the job.
  b_lo_ = lo_nibble(job_.b);
  b_hi_ = hi_nibble(job_.b);
  decode_count_ = 1;
  outputs_.resize(job_.a_ops.size(), 0);
}

NibbleStepInfo NibbleEngine::step() {
  if (finished_) throw std::logic_error("NibbleEngine: step after finish");

  NibbleStepInfo info;
  info.element = element_index_;
  info.nibble_index = nibble_index_;
  info.loaded_element = (nibble_index_ == 0);

  const Operand8 a = job_.a_ops[element_index_];
  const Nibble bn = (nibble_index_ == 0) ? b_lo_ : b_hi_;
  const std::uint16_t partial = pl(a, bn);
  const std::uint16_t aligned =
      static_cast<std::uint16_t>(partial << (4 * nibble_index_));
  acc_ = static_cast<std::uint16_t>(acc_ + aligned);

  ++cycle_;
  info.cycle = cycle_;
  info.acc = acc_;

  if (nibble_index_ == 1) {
    outputs_[element_index_] = acc_;
    info.wrote_output = true;
    info.output = acc_;
    // Element done: wrap the nibble index, advance, clear the
    // accumulator for the next element.
    acc_ = 0;
    nibble_index_ = 0;
    if (++element_index_ == job_.a_ops.size()) finished_ = true;
  } else {
    nibble_index_ = 1;
  }
  return info;
}

std::uint64_t nibble_mode_cycles(const NibbleMode& mode, std::size_t n) {
  if (mode.lanes == 0) throw std::invalid_argument("NibbleMode: lanes >= 1");
  const std::uint64_t per_lane_elems = (n + mode.lanes - 1) / mode.lanes;
  if (mode.kind == NibbleModeKind::Sequential) return 2 * per_lane_elems;
  return per_lane_elems;
}

NibbleRun nibble_multiply(const VectorJob& job, const NibbleMode& mode) {
  validate_job(job);
  if (mode.lanes == 0) throw std::invalid_argument("NibbleMode: lanes >= 1");
  const std::size_t n = job.a_ops.size();

  NibbleRun run;
  run.products.resize(n);
  run.b_decodes = 1;
  const Nibble b_lo = lo_nibble(job.b);
  const Nibble b_hi = hi_nibble(job.b);

  if (mode.kind == NibbleModeKind::Sequential) {
    // Lanes process contiguous element chunks, each element in two
    // nibble-serial cycles; the job finishes with the fullest lane.
    const std::size_t chunk = (n + mode.lanes - 1) / mode.lanes;
    for (std::size_t lane = 0, lo = 0; lo < n; ++lane, lo += chunk) {
      const std::size_t hi = std::min(lo + chunk, n);
      VectorJob slice{{job.a_ops.begin() + lo, job.a_ops.begin() + hi},
                      job.b};
      NibbleEngine engine(slice);
      while (!engine.finished()) engine.step();
      for (std::size_t i = lo; i < hi; ++i)
        run.products[i] = engine.outputs()[i - lo];
    }
  } else {
    // Both nibbles evaluated combinationally: one element per lane per
    // cycle.
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t a = job.a_ops[i];
      const std::uint16_t p0 = pl(a, b_lo);
      const std::uint16_t p1 = pl(a, b_hi);
      run.products[i] = static_cast<Product16>(p0 + (p1 << 4));
    }
  }
  run.cycles = nibble_mode_cycles(mode, n);
  return run;
}

}  // namespace mulsim
