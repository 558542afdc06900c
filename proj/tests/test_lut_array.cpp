#include <stdexcept>

#include "doctest.h"
#include "mulsim/lut_array.hpp"
#include "mulsim/rng.hpp"

using namespace mulsim;

TEST_CASE("result string contents") {
  const ResString zero = build_res_string(Nibble{0});
  for (unsigned bit = 0; bit < 120; ++bit) CHECK_FALSE(zero.bit(bit));

  const ResString one = build_res_string(Nibble{1});
  for (unsigned a = 1; a <= 15; ++a) CHECK(one.slices[a - 1] == a);

  // slice 11 of the b=13 string: 11*13 = 143.
  CHECK(oracle_mul(11, 13) == 0x8F);
  CHECK(extract_slice(build_res_string(Nibble{13}), Nibble{11}) == 0x8F);
}

TEST_CASE("slice extraction") {
  const ResString s7 = build_res_string(Nibble{7});
  CHECK(extract_slice(s7, Nibble{0}) == 0);  // zero-initialized partial
  CHECK(extract_slice(s7, Nibble{9}) == 0x3F);
  CHECK(oracle_mul(9, 7) == 0x3F);
  const ResString s15 = build_res_string(Nibble{15});
  CHECK(extract_slice(s15, Nibble{15}) == 0xE1);
  CHECK(oracle_mul(15, 15) == 0xE1);
}

TEST_CASE("LUT soundness, all 256 nibble pairs") {
  for (unsigned b = 0; b < 16; ++b) {
    const ResString s = build_res_string(Nibble{static_cast<std::uint8_t>(b)});
    for (unsigned a = 0; a < 16; ++a)
      CHECK(extract_slice(s, Nibble{static_cast<std::uint8_t>(a)}) == a * b);
  }
}

TEST_CASE("LUT storage is 16 x 120 bits") {
  CHECK(HexLut::storage_bytes() == 240);
}

TEST_CASE("LM composition examples") {
  const HexLut& lut = hex_lut();

  LmOutput out = lm_multiply(LmInput{0x0000, 0x00}, lut);
  CHECK(out.out1 == 0);
  CHECK(out.out2 == 0);

  out = lm_multiply(LmInput{0xFFFF, 0xFF}, lut);
  CHECK(out.out1 == 0xFE01);
  CHECK(out.out2 == 0xFE01);

  // 3*37 = 111, 18*37 = 666.
  out = lm_multiply(LmInput{0x1203, 0x25}, lut);
  CHECK(out.out1 == 0x006F);
  CHECK(out.out2 == 0x029A);
  CHECK(oracle_mul(0x03, 0x25) == 0x006F);
  CHECK(oracle_mul(0x12, 0x25) == 0x029A);
}

TEST_CASE("LM soundness: exhaustive b and low byte, random high byte") {
  const HexLut& lut = hex_lut();
  SplitMix64 g(0xA5A5);
  for (unsigned b = 0; b < 256; ++b) {
    for (unsigned lo = 0; lo < 256; ++lo) {
      const std::uint8_t hi = static_cast<std::uint8_t>(g.next() & 0xFF);
      const LmInput inp{static_cast<std::uint16_t>(lo | (hi << 8)),
                        static_cast<std::uint8_t>(b)};
      const LmOutput out = lm_multiply(inp, lut);
      REQUIRE(out.out1 == oracle_mul(static_cast<std::uint8_t>(lo),
                                     static_cast<std::uint8_t>(b)));
      REQUIRE(out.out2 == oracle_mul(hi, static_cast<std::uint8_t>(b)));
    }
  }
}

TEST_CASE("LM soundness: random a16 sweep") {
  const HexLut& lut = hex_lut();
  SplitMix64 g(0x1234);
  for (int i = 0; i < (1 << 16); ++i) {
    const std::uint16_t a16 = static_cast<std::uint16_t>(g.next());
    const std::uint8_t b = static_cast<std::uint8_t>(g.next() & 0xFF);
    const LmOutput out = lm_multiply(LmInput{a16, b}, lut);
    REQUIRE(out.out1 == oracle_mul(static_cast<std::uint8_t>(a16), b));
    REQUIRE(out.out2 == oracle_mul(static_cast<std::uint8_t>(a16 >> 8), b));
  }
}

TEST_CASE("array multiply over vectors") {
  const LutArrayRun run = lut_array_multiply(VectorJob{{1, 2, 3, 4}, 5});
  CHECK(run.products == std::vector<Product16>{5, 10, 15, 20});
  CHECK(run.cycles == 1);
  CHECK(run.lm_blocks == 2);

  // Odd length takes the zero-padding path.
  const LutArrayRun odd = lut_array_multiply(VectorJob{{9, 9, 9}, 0});
  CHECK(odd.products == std::vector<Product16>{0, 0, 0});
  CHECK(odd.lm_blocks == 2);

  const LutArrayRun wide =
      lut_array_multiply(VectorJob{std::vector<std::uint8_t>(8, 0xFF), 0xFF});
  CHECK(wide.products == std::vector<Product16>(8, 0xFE01));

  CHECK_THROWS_AS(lut_array_multiply(VectorJob{{}, 1}), std::invalid_argument);
}

TEST_CASE("exactly two string lookups per job, any length") {
  SplitMix64 g(7);
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{8}, std::size_t{64}}) {
    const VectorJob job = random_job(g, n);
    const LutArrayRun run = lut_array_multiply(job);
    CHECK(run.lut_lookups == 2);
    CHECK(run.lm_blocks == (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(run.products[i] == oracle_mul(job.a_ops[i], job.b));
  }
}
