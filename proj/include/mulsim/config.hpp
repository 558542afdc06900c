#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulsim/arith.hpp"
#include "mulsim/nibble.hpp"

// Run configuration: a flat key=value file plus command-line
// overrides. Keys: arch, n, mode, lanes, seed, stimulus, out. Array
// values are comma-separated; stimulus is "exhaustive" or
// "random:<count>".

namespace mulsim {

struct StimulusSpec {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::uint64_t count = 0;  // random case/job count
};

struct RunConfig {
  std::vector<ArchKind> archs{kAllArchKinds,
                              kAllArchKinds + std::size(kAllArchKinds)};
  std::vector<std::size_t> ns{4, 8, 16};  // the paper's operand sweep
  NibbleMode nibble_mode{NibbleModeKind::Sequential, 1};
  bool lanes_explicit = false;  // lanes follow n unless overridden
  std::uint64_t seed = 1;
  StimulusSpec stimulus;
  std::string out_path;
};

// All parse errors throw std::invalid_argument (usage errors).
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);
RunConfig parse_config_file(const std::string& path);  // I/O: runtime_error
std::vector<std::string> split_list(const std::string& csv);

}  // namespace mulsim
