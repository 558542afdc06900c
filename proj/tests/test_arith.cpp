#include <stdexcept>

#include "doctest.h"
#include "mulsim/arith.hpp"

using namespace mulsim;

TEST_CASE("oracle_mul known products") {
  CHECK(oracle_mul(0, 0) == 0);
  CHECK(oracle_mul(1, 0xC7) == 0xC7);
  CHECK(oracle_mul(0xFF, 0xFF) == 0xFE01);  // 255*255 = 65025
}

TEST_CASE("oracle_mul commutes and fits 16 bits") {
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      const Product16 p = oracle_mul(static_cast<std::uint8_t>(a),
                                     static_cast<std::uint8_t>(b));
      CHECK(p == oracle_mul(static_cast<std::uint8_t>(b),
                            static_cast<std::uint8_t>(a)));
      CHECK(p <= 65025);
    }
  }
}

TEST_CASE("split_nibbles positional") {
  CHECK(split_nibbles(0x00).lo.value == 0);
  CHECK(split_nibbles(0x00).hi.value == 0);
  CHECK(split_nibbles(0x34).lo.value == 4);
  CHECK(split_nibbles(0x34).hi.value == 3);
  CHECK(split_nibbles(0xFF).lo.value == 15);
  CHECK(split_nibbles(0xFF).hi.value == 15);
}

TEST_CASE("split_nibbles round-trips all 256 inputs") {
  for (unsigned x = 0; x < 256; ++x) {
    const NibblePair p = split_nibbles(static_cast<std::uint8_t>(x));
    CHECK(p.lo.value < 16);
    CHECK(p.hi.value < 16);
    CHECK(p.lo.value + 16u * p.hi.value == x);
  }
}

TEST_CASE("vector latency matches the analytical table") {
  CHECK(vector_latency(ArchKind::ShiftAdd, 1) == 8);
  CHECK(vector_latency(ArchKind::Nibble, 16) == 32);
  CHECK(vector_latency(ArchKind::Wallace, 8) == 1);
  CHECK(vector_latency(ArchKind::Booth, 8) == 32);
  CHECK_THROWS_AS(vector_latency(ArchKind::Nibble, 0), std::invalid_argument);
}

TEST_CASE("latency linear for sequential kinds, constant for combinational") {
  for (ArchKind arch : kAllArchKinds) {
    for (std::size_t n = 1; n <= 64; ++n) {
      if (is_sequential(arch))
        CHECK(vector_latency(arch, n) == n * vector_latency(arch, 1));
      else
        CHECK(vector_latency(arch, n) == 1);
    }
  }
}

TEST_CASE("job validation") {
  VectorJob empty{{}, 3};
  CHECK_THROWS_AS(validate_job(empty), std::invalid_argument);
  VectorJob too_long{std::vector<std::uint8_t>(65, 1), 3};
  CHECK_THROWS_AS(validate_job(too_long), std::invalid_argument);
  VectorJob max_len{std::vector<std::uint8_t>(64, 1), 3};
  CHECK_NOTHROW(validate_job(max_len));
}

TEST_CASE("architecture names round-trip") {
  for (ArchKind arch : kAllArchKinds)
    CHECK(arch_from_name(arch_name(arch)) == arch);
  CHECK(arch_from_name("array") == ArchKind::LutArray);
  CHECK_THROWS_AS(arch_from_name("dadda"), std::invalid_argument);
}
