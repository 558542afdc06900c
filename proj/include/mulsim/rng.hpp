#pragma once

#include <cstdint>

#include "mulsim/arith.hpp"

namespace mulsim {

// SplitMix64: tiny splittable generator. Every job of a campaign draws
// from its own stream derived from (seed, stream index), so results do
// not depend on scheduling or thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 split_stream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
  g.next();
  return g;
}

inline VectorJob random_job(SplitMix64& g, std::size_t n) {
  VectorJob job;
  job.a_ops.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    job.a_ops[i] = static_cast<std::uint8_t>(g.next() & 0xFF);
  job.b = static_cast<std::uint8_t>(g.next() & 0xFF);
  return job;
}

inline VectorJob random_job_any_len(SplitMix64& g) {
  const std::size_t n = 1 + g.next_below(kMaxVectorLen);
  return random_job(g, n);
}

}  // namespace mulsim
