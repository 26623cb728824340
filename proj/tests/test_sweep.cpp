#include "doctest.h"

#include <array>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "gpseq/serialize.hpp"
#include "gpseq/sweep.hpp"
#include "reference_tables.hpp"

using namespace gpseq;
namespace fs = std::filesystem;

namespace {

SweepGrid small_grid() {
  SweepGrid g;
  g.l_range = {1, 10};
  g.a_range = {1, 3};
  g.m_max = 30;
  return g;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("gpseq_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("grid validation") {
  SweepGrid g;
  CHECK_NOTHROW(g.validate());
  g.l_range = {3, 2};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g = SweepGrid{};
  g.a_range = {0, 2};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g = SweepGrid{};
  g.m_max = 0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("compute_cell matches reference cells") {
  auto c = compute_cell(6, 1, 100);
  REQUIRE(c.largest_non_log_concave.has_value());
  CHECK(*c.largest_non_log_concave == 5);
  CHECK(c.non_unimodal_m.empty());
  CHECK(c.failing_m.back() == 5);

  auto c2 = compute_cell(13, 10, 100);
  REQUIRE(c2.largest_non_log_concave.has_value());
  CHECK(*c2.largest_non_log_concave == 39);

  CHECK_FALSE(compute_cell(5, 1, 100).largest_non_log_concave.has_value());
}

TEST_CASE("small sweep agrees with the reference table and is thread independent") {
  auto one = run_table2(small_grid(), {1, std::nullopt});
  auto three = run_table2(small_grid(), {3, std::nullopt});
  CHECK(one == three);
  for (std::uint32_t l = 1; l <= 10; ++l) {
    for (std::uint32_t a = 1; a <= 3; ++a) {
      // m_max = 30 is above every reference entry in this block.
      CHECK(one.cell_value(l, a) == testing::kTable2[l - 1][a - 1]);
    }
  }
  CHECK(one.unimodality_all);
  CHECK(one.window_violations.empty());
  CHECK(one.exception_misses.empty());
  CHECK(one.columns_monotone());
  CHECK(one.thresholds_persistent());
}

TEST_CASE("column monotonicity on synthetic data") {
  std::array<std::uint64_t, 3> col{0, 5, 3};
  auto v = column_violations(col, 1);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == 3);
  std::array<std::uint64_t, 4> ok{0, 0, 4, 4};
  CHECK(column_violations(ok, 1).empty());

  SweepReport r;
  r.grid.l_range = {1, 3};
  r.grid.a_range = {1, 1};
  r.grid.m_max = 10;
  for (std::uint32_t l = 1; l <= 3; ++l) {
    CellResult c;
    c.key = {l, 1};
    c.m_max = 10;
    if (col[l - 1] != 0) {
      c.largest_non_log_concave = col[l - 1];
      c.failing_m = {col[l - 1]};
    }
    r.cells[c.key] = c;
  }
  auto cols = check_column_monotonicity(r);
  REQUIRE(cols.size() == 1);
  CHECK_FALSE(cols[0].monotone);
  CHECK(cols[0].violations == std::vector<std::uint32_t>{3});

  // m = 5 fails at l = 2 but not l = 3: threshold 2 with a gap at 3.
  auto th = check_l_thresholds(r);
  bool found = false;
  for (const auto& t : th) {
    if (t.m == 5) {
      found = true;
      CHECK(t.threshold == 2);
      CHECK_FALSE(t.persistent);
      CHECK(t.gaps == std::vector<std::uint32_t>{3});
    }
  }
  CHECK(found);
}

TEST_CASE("standalone threshold") {
  auto t1 = check_l_threshold(1, 5, 20);
  REQUIRE(t1.threshold.has_value());
  CHECK(*t1.threshold == 6);
  CHECK(t1.persistent);
  CHECK(t1.gaps.empty());

  auto t2 = check_l_threshold(2, 7, 20);
  REQUIRE(t2.threshold.has_value());
  CHECK(*t2.threshold == 9);
  CHECK(t2.persistent);

  CHECK_FALSE(check_l_threshold(1, 100, 20).threshold.has_value());
}

TEST_CASE("CSV and JSON export") {
  SweepReport empty;
  empty.grid.l_range = {1, 2};
  empty.grid.a_range = {1, 3};
  CHECK(table_csv(empty) == "l\\a,1,2,3\n");

  auto rep = run_table2(small_grid());
  auto dir = scratch("export");
  fs::create_directories(dir);

  export_report(rep, ExportFormat::json, dir / "r.json");
  CHECK(import_report_json(dir / "r.json") == rep);

  export_report(rep, ExportFormat::csv, dir / "r.csv");
  auto parsed = import_table_csv(dir / "r.csv");
  CHECK(parsed.size() == rep.cells.size());
  for (const auto& [key, cell] : rep.cells) CHECK(parsed.at(key) == cell.largest_non_log_concave.value_or(0));

  CHECK(parse_export_format("csv") == ExportFormat::csv);
  CHECK(parse_export_format("json") == ExportFormat::json);
  CHECK_THROWS_AS(parse_export_format("xml"), std::invalid_argument);

  CHECK_THROWS_AS(export_report(rep, ExportFormat::csv, dir / "missing" / "x.csv"), std::runtime_error);
  CHECK_THROWS_AS(import_report_json(dir / "nope.json"), std::runtime_error);
  CHECK_THROWS_AS(parse_table_csv("l\\a,1\n1,x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table_csv("l\\a,1\n1,12x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table_csv("l\\a,1\n1,2,3\n"), std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("shards make runs resumable") {
  auto dir = scratch("shards");
  SweepGrid g = small_grid();
  g.l_range = {8, 9};
  auto first = run_table2(g, {2, dir});
  std::size_t shards = 0;
  for (const auto& e : fs::directory_iterator(dir)) shards += e.path().extension() == ".json";
  CHECK(shards == 6);

  // A tampered shard is picked up instead of recomputed.
  fs::path shard = dir / "cell_l8_a1_m30.json";
  REQUIRE(fs::exists(shard));
  auto cell = first.cells.at({8, 1});
  cell.largest_non_log_concave = 29;
  {
    std::ofstream out(shard);
    out << to_json(cell).dump();
  }
  auto second = run_table2(g, {1, dir});
  CHECK(second.cell_value(8, 1) == 29);
  CHECK(second.cell_value(9, 1) == first.cell_value(9, 1));
  fs::remove_all(dir);
}
