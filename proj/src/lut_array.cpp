#include "mulsim/lut_array.hpp"

namespace mulsim {

ResString build_res_string(Nibble b) {
  ResString s;
  for (unsigned a = 1; a <= 15; ++a)
    s.slices[a - 1] = static_cast<std::uint8_t>(a * b.value);
  return s;
}

std::uint8_t extract_slice(const ResString& s, Nibble a) {
  if (a.value == 0) return 0;
  return s.slices[a.value - 1];
}

HexLut::HexLut() {
  for (unsigned b = 0; b < 16; ++b)
    entries_[b] = build_res_string(Nibble{static_cast<std::uint8_t>(b)});
}

const HexLut& hex_lut() {
  static const HexLut lut;
  return lut;
}

LmOutput lm_multiply(const LmInput& inp, const ResString& rs0,
                     const ResString& rs1) {
  const Nibble a0 = lo_nibble(static_cast<std::uint8_t>(inp.a16));
  const Nibble a1 = hi_nibble(static_cast<std::uint8_t>(inp.a16));
  const Nibble a2 = lo_nibble(static_cast<std::uint8_t>(inp.a16 >> 8));
  const Nibble a3 = hi_nibble(static_cast<std::uint8_t>(inp.a16 >> 8));

  const std::uint16_t p0o1 = extract_slice(rs0, a0);
  const std::uint16_t p2o1 = extract_slice(rs1, a0);
  const std::uint16_t p1o1 = extract_slice(rs0, a1);
  const std::uint16_t p3o1 = extract_slice(rs1, a1);

  const std::uint16_t p0o2 = extract_slice(rs0, a2);
  const std::uint16_t p2o2 = extract_slice(rs1, a2);
  const std::uint16_t p1o2 = extract_slice(rs0, a3);
  const std::uint16_t p3o2 = extract_slice(rs1, a3);

  LmOutput out;
  out.out1 = static_cast<Product16>(p0o1 + (p2o1 << 4) + (p1o1 << 4) +
                                    (p3o1 << 8));
  out.out2 = static_cast<Product16>(p0o2 + (p2o2 << 4) + (p1o2 << 4) +
                                    (p3o2 << 8));
  return out;
}

LmOutput lm_multiply(const LmInput& inp, const HexLut& lut) {
  std::uint32_t lookups = 0;
  const ResString& rs0 = lut.lookup(lo_nibble(inp.b), lookups);
  const ResString& rs1 = lut.lookup(hi_nibble(inp.b), lookups);
  return lm_multiply(inp, rs0, rs1);
}

LutArrayRun lut_array_multiply(const VectorJob& job) {
  validate_job(job);
  const std::size_t n = job.a_ops.size();

  LutArrayRun run;
  run.products.resize(n);

  // The broadcast-reuse property: the two strings are selected once and
  // shared by every LM block in the array.
  const HexLut& lut = hex_lut();
  const ResString& rs0 = lut.lookup(lo_nibble(job.b), run.lut_lookups);
  const ResString& rs1 = lut.lookup(hi_nibble(job.b), run.lut_lookups);

  for (std::size_t i = 0; i < n; i += 2) {
    const std::uint8_t lo = job.a_ops[i];
    const std::uint8_t hi = (i + 1 < n) ? job.a_ops[i + 1] : 0;
    LmInput inp;
    inp.a16 = static_cast<std::uint16_t>(lo | (hi << 8));
    inp.b = job.b;
    const LmOutput out = lm_multiply(inp, rs0, rs1);
    run.products[i] = out.out1;
    if (i + 1 < n) run.products[i + 1] = out.out2;
    ++run.lm_blocks;
  }
  run.cycles = 1;
  return run;
}

}  // namespace mulsim
