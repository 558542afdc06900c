#include <cstdio>
#include <fstream>

#include <stdexcept>

#include "doctest.h"
#include "mulsim/config.hpp"
#include "mulsim/paper_ref.hpp"
#include "mulsim/report.hpp"

using namespace mulsim;

TEST_CASE("config entries") {
  RunConfig cfg;
  apply_config_entry(cfg, "arch", "nibble,wallace");
  CHECK(cfg.archs == std::vector<ArchKind>{ArchKind::Nibble,
                                           ArchKind::Wallace});
  apply_config_entry(cfg, "n", "2,4");
  CHECK(cfg.ns == std::vector<std::size_t>{2, 4});
  apply_config_entry(cfg, "mode", "unrolled");
  CHECK(cfg.nibble_mode.kind == NibbleModeKind::UnrolledNibbles);
  apply_config_entry(cfg, "lanes", "2");
  CHECK(cfg.nibble_mode.lanes == 2);
  apply_config_entry(cfg, "seed", "99");
  CHECK(cfg.seed == 99);
  apply_config_entry(cfg, "stimulus", "random:50");
  CHECK(cfg.stimulus.kind == StimulusSpec::Kind::Random);
  CHECK(cfg.stimulus.count == 50);
  apply_config_entry(cfg, "stimulus", "exhaustive");
  CHECK(cfg.stimulus.kind == StimulusSpec::Kind::Exhaustive);
  apply_config_entry(cfg, "out", "report.csv");
  CHECK(cfg.out_path == "report.csv");
}

TEST_CASE("config errors are usage errors") {
  RunConfig cfg;
  CHECK_THROWS_AS(apply_config_entry(cfg, "arch", "dadda"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "n", "0"), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "n", "65"), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "mode", "pipelined"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "stimulus", "sometimes"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "stimulus", "random:0"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "volume", "11"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "lanes", "0"),
                  std::invalid_argument);
}

TEST_CASE("config file round-trip") {
  const std::string path = "test_config_tmp.cfg";
  {
    std::ofstream f(path);
    f << "# sweep setup\n"
      << "arch=nibble,shift_add\n"
      << "n=4,8\n"
      << "seed=42\n"
      << "stimulus=random:10\n"
      << "\n"
      << "out=x.csv\n";
  }
  const RunConfig cfg = parse_config_file(path);
  std::remove(path.c_str());
  CHECK(cfg.archs == std::vector<ArchKind>{ArchKind::Nibble,
                                           ArchKind::ShiftAdd});
  CHECK(cfg.ns == std::vector<std::size_t>{4, 8});
  CHECK(cfg.seed == 42);
  CHECK(cfg.stimulus.count == 10);
  CHECK(cfg.out_path == "x.csv");

  CHECK_THROWS_AS(parse_config_file("no_such_file.cfg"), std::runtime_error);
}

TEST_CASE("paper reference data") {
  CHECK(paper_reference(ArchKind::LutArray, 16).area_um2 == 2954.20);
  CHECK(paper_reference(ArchKind::Nibble, 16).area_um2 == 1132.29);
  CHECK(paper_reference(ArchKind::Wallace, 16).area_um2 == 2336.54);
  CHECK(paper_reference(ArchKind::ShiftAdd, 4).area_um2 == 528.57);
  CHECK(paper_reference(ArchKind::Booth, 4).power_mw == 0.0257);
  // Not published: shift-add area at 16, Wallace area at 8, any Booth
  // figure beyond 4 operands.
  CHECK_FALSE(paper_reference(ArchKind::ShiftAdd, 16).area_um2.has_value());
  CHECK_FALSE(paper_reference(ArchKind::Wallace, 8).area_um2.has_value());
  CHECK_FALSE(paper_reference(ArchKind::Booth, 8).power_mw.has_value());
  CHECK_FALSE(paper_reference(ArchKind::Booth, 2).area_um2.has_value());
}

TEST_CASE("bench report: schema, ratios recompute, determinism") {
  RunConfig cfg;
  cfg.archs = {ArchKind::ShiftAdd, ArchKind::Nibble, ArchKind::Wallace};
  cfg.ns = {2};
  cfg.seed = 5;
  cfg.stimulus = {StimulusSpec::Kind::Random, 4};

  const BenchReport report = run_bench(cfg);
  const std::string csv = bench_csv(report);
  CHECK(csv.rfind("arch,n,cycles,ge,depth,toggles_per_product,paper_area_um2,"
                  "paper_power_mw,area_ratio_vs_shiftadd,"
                  "power_proxy_ratio_vs_shiftadd\n",
                  0) == 0);

  // Ratio columns recompute from the raw columns.
  for (const BenchRow& row : report.rows) {
    const auto base = report.baseline.at(row.n);
    if (row.arch == ArchKind::ShiftAdd) {
      CHECK(base.first == row.ge);
      CHECK(base.second == doctest::Approx(row.toggles_per_product()));
    }
  }
  const std::string csv2 = bench_csv(run_bench(cfg));
  CHECK(csv2 == csv);

  // Exhaustive stimulus is not a bench mode.
  cfg.stimulus = {StimulusSpec::Kind::Exhaustive, 0};
  CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
}
