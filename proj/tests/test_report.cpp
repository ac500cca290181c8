#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "radio/report.hpp"

using namespace radio;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

BoundRecord record(FamilyKind kind, int t, int k, long lower, long upper) {
  DistanceFamily fam = kind == FamilyKind::OneAndT ? DistanceFamily::one_and_t(t)
                       : kind == FamilyKind::TwoConsecutive
                           ? DistanceFamily::two_consecutive(t)
                           : DistanceFamily::consecutive(t);
  return BoundRecord{fam, k, lower, upper, LowerProvenance::AnalyticProposition,
                     UpperProvenance::AnalyticTheorem};
}

}  // namespace

TEST_CASE("embedded reference data integrity") {
  const auto& entries = embedded_reference();
  CHECK(entries.size() == 192);  // 3 families x t 2..9 x k 2..9
  CHECK(fnv1a64(reference_csv()) == kReferenceCsvChecksum);
  CHECK(slurp(std::string(RADIO_SOURCE_DIR) + "/data/reference_bounds.csv") ==
        reference_csv());
  CHECK(parse_reference_csv(reference_csv()) == entries);

  auto find = [&](FamilyKind kind, int t, int k) -> const ReferenceEntry& {
    for (const auto& e : entries)
      if (e.kind == kind && e.t == t && e.k == k) return e;
    REQUIRE(false);
    return entries.front();
  };
  CHECK(find(FamilyKind::Consecutive, 2, 2).lower == 6);
  CHECK(find(FamilyKind::Consecutive, 2, 2).exact);
  CHECK(find(FamilyKind::Consecutive, 3, 3).upper == 17);
  CHECK(find(FamilyKind::OneAndT, 9, 4).lower == 25);
  CHECK(find(FamilyKind::OneAndT, 9, 4).upper == 28);
  CHECK(!find(FamilyKind::OneAndT, 9, 4).exact);
  CHECK(find(FamilyKind::TwoConsecutive, 4, 2).upper == 7);
  CHECK(find(FamilyKind::TwoConsecutive, 9, 9).lower == 51);
  CHECK(find(FamilyKind::TwoConsecutive, 9, 9).upper == 233);
}

TEST_CASE("reference csv parser rejects malformed input") {
  CHECK_THROWS_AS(parse_reference_csv("nope\n"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_reference_csv("family,t,k,lower,upper,exact,source\nconsecutive,2,2,6\n"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_reference_csv(
                      "family,t,k,lower,upper,exact,source\nconsecutive,2,2,7,6,false,x\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_reference_csv(
                      "family,t,k,lower,upper,exact,source\nconsecutive,2,2,5,6,true,x\n"),
                  std::invalid_argument);
}

TEST_CASE("row classification") {
  ReferenceEntry ref{FamilyKind::Consecutive, 2, 2, 6, 6, true};
  CHECK(classify(ref, record(FamilyKind::Consecutive, 2, 2, 6, 6)) == RowStatus::Match);
  ReferenceEntry range{FamilyKind::Consecutive, 2, 8, 65, 72, false};
  CHECK(classify(range, record(FamilyKind::Consecutive, 2, 8, 66, 72)) ==
        RowStatus::Tighter);
  CHECK(classify(range, record(FamilyKind::Consecutive, 2, 8, 65, 72)) ==
        RowStatus::Match);
  CHECK(classify(range, record(FamilyKind::Consecutive, 2, 8, 60, 80)) ==
        RowStatus::Looser);
  CHECK(classify(range, record(FamilyKind::Consecutive, 2, 8, 73, 80)) ==
        RowStatus::Conflict);
  CHECK(classify(range, record(FamilyKind::Consecutive, 2, 8, 0, 64)) ==
        RowStatus::Conflict);
}

TEST_CASE("grid over the worked cells matches the reference exactly") {
  GridRequest request;
  request.families = {FamilyKind::Consecutive};
  request.t_from = 2;
  request.t_to = 3;
  request.k_from = 2;
  request.k_to = 3;
  request.cell_budget_seconds = 60.0;
  request.config.node_budget = 50'000'000;
  request.config.max_prefix = 40;

  GridReport report = run_grid(request, embedded_reference());
  REQUIRE(report.rows.size() == 4);
  CHECK(report.conflicts() == 0);
  for (const auto& row : report.rows) {
    CAPTURE(row.computed.family.name());
    CAPTURE(row.computed.k);
    REQUIRE(row.status.has_value());
    CHECK(row.note.empty());
    bool ok = *row.status == RowStatus::Match || *row.status == RowStatus::Tighter;
    CHECK(ok);
  }
  // all four cells are exact in the reference, so Match means closed
  CHECK(report.rows[0].computed.lower == 6);
  CHECK(report.rows[1].computed.lower == 12);
  CHECK(report.rows[2].computed.lower == 8);
  CHECK(report.rows[3].computed.lower == 17);
}

TEST_CASE("two-consecutive t=3 k=3 reproduces the exact 14") {
  GridRequest request;
  request.families = {FamilyKind::TwoConsecutive};
  request.t_from = 3;
  request.t_to = 3;
  request.k_from = 3;
  request.k_to = 3;
  request.cell_budget_seconds = 60.0;
  request.config.node_budget = 50'000'000;
  request.config.max_prefix = 40;
  GridReport report = run_grid(request, embedded_reference());
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].computed.upper == 14);
  CHECK(report.rows[0].status == RowStatus::Match);
}

TEST_CASE("empty ranges give empty reports") {
  GridRequest request;
  request.k_from = 5;
  request.k_to = 4;
  CHECK(run_grid(request, embedded_reference()).rows.empty());
}

TEST_CASE("reports round-trip through csv and json") {
  GridRequest request;
  request.t_from = 2;
  request.t_to = 4;
  request.k_from = 2;
  request.k_to = 5;
  request.cell_budget_seconds = 0;  // analytic + patterns only
  GridReport report = run_grid(request, embedded_reference());
  CHECK(report.conflicts() == 0);

  std::string csv = report_to_csv(report);
  GridReport back = parse_report_csv(csv, embedded_reference());
  CHECK(report_to_csv(back) == csv);
  REQUIRE(back.rows.size() == report.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    CHECK(back.rows[i].computed == report.rows[i].computed);
    CHECK(back.rows[i].reference == report.rows[i].reference);
    CHECK(back.rows[i].status == report.rows[i].status);
  }

  std::string json = report_to_json(report);
  GridReport jback = parse_report_json(json, embedded_reference());
  CHECK(report_to_json(jback) == json);
  CHECK(jback.rows.size() == report.rows.size());
}

TEST_CASE("grid cells without a reference entry carry no status") {
  GridRequest request;
  request.families = {FamilyKind::Consecutive};
  request.t_from = 2;
  request.t_to = 2;
  request.k_from = 1;
  request.k_to = 1;  // the reference grid starts at k = 2
  request.cell_budget_seconds = 0;
  GridReport report = run_grid(request, embedded_reference());
  REQUIRE(report.rows.size() == 1);
  CHECK(!report.rows[0].reference.has_value());
  CHECK(!report.rows[0].status.has_value());
  CHECK(report.conflicts() == 0);
}

TEST_CASE("prefix-search outcomes persist in the cache and are reused") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "radio_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  setenv("RADIO_CACHE_DIR", dir.c_str(), 1);

  GridRequest request;
  request.families = {FamilyKind::Consecutive};
  request.t_from = 2;
  request.t_to = 2;
  request.k_from = 2;
  request.k_to = 2;
  request.cell_budget_seconds = 30.0;
  request.config.max_prefix = 40;

  GridReport first = run_grid(request, embedded_reference());
  fs::path file = dir / "radio_cache.jsonl";
  REQUIRE(fs::exists(file));
  auto lines_of = [&](const fs::path& p) {
    std::ifstream in(p);
    int n = 0;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++n;
    return n;
  };
  int lines = lines_of(file);
  CHECK(lines > 0);

  GridReport second = run_grid(request, embedded_reference());
  CHECK(lines_of(file) == lines);  // fully served from the cache
  CHECK(second.rows[0].computed == first.rows[0].computed);

  unsetenv("RADIO_CACHE_DIR");
  fs::remove_all(dir);
}
