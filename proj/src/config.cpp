#include "mulsim/config.hpp"

#include <fstream>
#include <stdexcept>

namespace mulsim {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(csv.substr(start));
      break;
    }
    out.push_back(csv.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

namespace {

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("invalid ") + what + ": '" + s +
                                "'");
  }
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "arch") {
    cfg.archs.clear();
    for (const std::string& name : split_list(value))
      cfg.archs.push_back(arch_from_name(name));
    if (cfg.archs.empty())
      throw std::invalid_argument("arch list must not be empty");
  } else if (key == "n") {
    cfg.ns.clear();
    for (const std::string& s : split_list(value)) {
      const std::uint64_t n = parse_u64(s, "n");
      if (n == 0 || n > kMaxVectorLen)
        throw std::invalid_argument("n must be in 1..64, got " + s);
      cfg.ns.push_back(static_cast<std::size_t>(n));
    }
  } else if (key == "mode") {
    if (value == "sequential")
      cfg.nibble_mode.kind = NibbleModeKind::Sequential;
    else if (value == "unrolled")
      cfg.nibble_mode.kind = NibbleModeKind::UnrolledNibbles;
    else
      throw std::invalid_argument("mode must be sequential|unrolled, got '" +
                                  value + "'");
  } else if (key == "lanes") {
    const std::uint64_t lanes = parse_u64(value, "lanes");
    if (lanes == 0 || lanes > kMaxVectorLen)
      throw std::invalid_argument("lanes must be in 1..64");
    cfg.nibble_mode.lanes = static_cast<std::uint32_t>(lanes);
    cfg.lanes_explicit = true;
  } else if (key == "seed") {
    cfg.seed = parse_u64(value, "seed");
  } else if (key == "stimulus") {
    if (value == "exhaustive") {
      cfg.stimulus = {StimulusSpec::Kind::Exhaustive, 0};
    } else if (value.rfind("random:", 0) == 0) {
      const std::uint64_t count = parse_u64(value.substr(7), "stimulus count");
      if (count == 0)
        throw std::invalid_argument("random stimulus needs count >= 1");
      cfg.stimulus = {StimulusSpec::Kind::Random, count};
    } else {
      throw std::invalid_argument(
          "stimulus must be exhaustive|random:<count>, got '" + value + "'");
    }
  } else if (key == "out") {
    cfg.out_path = value;
  } else {
    throw std::invalid_argument("unknown config key: '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    // Trim whitespace; skip blanks and # comments.
    const auto l = line.find_first_not_of(" \t\r");
    if (l == std::string::npos) continue;
    const auto r = line.find_last_not_of(" \t\r");
    line = line.substr(l, r - l + 1);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    apply_config_entry(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

}  // namespace mulsim
