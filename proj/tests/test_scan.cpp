#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastack/scan.hpp"

using namespace parastack;

namespace {

DimVector dv(std::int64_t rank, Rows rows) { return validate(rank, std::move(rows)); }

}  // namespace

TEST_CASE("weight type grid is ordered and complete") {
  const auto wts = grid_weight_types(2, 2);
  REQUIRE(wts.size() == 7);  // (), (1), (2), (1,1), (1,2), (2,1), (2,2)
  CHECK(wts[0].points() == 0);
  CHECK(wts[1].flag_lens() == std::vector<int>{1});
  CHECK(wts[3].flag_lens() == std::vector<int>{1, 1});
  CHECK(wts[6].flag_lens() == std::vector<int>{2, 2});
}

TEST_CASE("vector grid enumerates every valid filling once") {
  const auto vecs = grid_vectors(WeightType::of({2}), 2);
  // rank 1: [0], [1]; rank 2: [0], [1], [2]
  REQUIRE(vecs.size() == 5);
  CHECK(vecs[0] == dv(1, {{0}}));
  CHECK(vecs[1] == dv(1, {{1}}));
  CHECK(vecs[4] == dv(2, {{2}}));

  CHECK(grid_vectors(WeightType::of({3}), 3).size() == 3 + 6 + 10);
}

TEST_CASE("bad grid bounds are rejected") {
  CHECK_THROWS_AS(grid_vectors(WeightType::of({2}), 0), InvalidBounds);
  CHECK_THROWS_AS(grid_weight_types(-1, 2), InvalidBounds);
  CHECK_THROWS_AS(grid_weight_types(2, 0), InvalidBounds);
  CHECK_THROWS_AS(run_scan_serial(GridBounds{2, 1, 2}, {}), InvalidBounds);
  CHECK_THROWS_AS(run_scan_serial(GridBounds{2, 1, 2}, {-1}), InvalidBounds);
}

TEST_CASE("parallel scan reproduces the serial reference") {
  const GridBounds bounds{3, 2, 2};
  const auto serial = run_scan_serial(bounds, {0, 1, 2});
  const auto parallel = run_scan_parallel(bounds, {0, 1, 2});
  CHECK(serial == parallel);
  CHECK(parallel == run_scan_parallel(bounds, {0, 1, 2}));  // deterministic
  // genus list order and duplicates do not matter
  CHECK(serial == run_scan_serial(bounds, {2, 0, 1, 1}));
}

TEST_CASE("rank-1 scans are all vacuously almost very good") {
  for (const ScanRow& row : run_scan_serial(GridBounds{1, 2, 3}, {0, 1, 2})) {
    CHECK(row.verdict.classification == Classification::AlmostVeryGood);
    CHECK(!row.verdict.margin);
  }
}

TEST_CASE("nontrivial flag points need an entry strictly inside (0, rank)") {
  CHECK(nontrivial_flag_points(dv(2, {})) == 0);
  CHECK(nontrivial_flag_points(dv(2, {{1}})) == 1);
  CHECK(nontrivial_flag_points(dv(2, {{2}})) == 0);
  CHECK(nontrivial_flag_points(dv(2, {{0}})) == 0);
  CHECK(nontrivial_flag_points(dv(2, {{2, 0}})) == 0);  // steps via 0 and rank only
  CHECK(nontrivial_flag_points(dv(2, {{2, 1}})) == 1);
  CHECK(nontrivial_flag_points(dv(3, {{1}, {3, 2}, {}})) == 2);
}

TEST_CASE("remark38 checks hold on a genus-2 grid") {
  const auto rows = run_scan_serial(GridBounds{3, 2, 2}, {2});
  CHECK(remark38_violations(rows).empty());
  for (const ScanRow& row : rows) {
    CHECK(row.verdict.classification == Classification::AlmostVeryGood);
  }
}

TEST_CASE("remark38 checks hold on a genus-1 grid") {
  const auto rows = run_scan_serial(GridBounds{3, 2, 2}, {1});
  CHECK(remark38_violations(rows).empty());
  for (const ScanRow& row : rows) {
    if (nontrivial_flag_points(row.alpha) >= 2) {
      CHECK(row.verdict.classification == Classification::AlmostVeryGood);
    }
  }
}

TEST_CASE("remark38 violations are reported") {
  // A fabricated row: genus 2 flagged as not almost good must be caught.
  ScanRow bad;
  bad.genus = 2;
  bad.alpha = dv(2, {});
  bad.verdict = Verdict{Classification::NotAlmostGood, 1, std::nullopt};
  CHECK(remark38_violations({bad}).size() == 1);

  ScanRow bad_g1;
  bad_g1.genus = 1;
  bad_g1.alpha = dv(2, {{1}});
  bad_g1.verdict = Verdict{Classification::NotAlmostGood, 1, std::nullopt};
  CHECK(remark38_violations({bad_g1}).size() == 1);

  // Trivial flags impose nothing, so a bad verdict there is not a violation.
  ScanRow plain;
  plain.genus = 1;
  plain.alpha = dv(2, {{2}});
  plain.verdict = Verdict{Classification::NotAlmostGood, 1, std::nullopt};
  CHECK(remark38_violations({plain}).empty());
}
