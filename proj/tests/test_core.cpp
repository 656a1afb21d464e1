#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parastack/core.hpp"
#include "test_support.hpp"

using namespace parastack;

namespace {

DimVector dv(std::int64_t rank, Rows rows) { return validate(rank, std::move(rows)); }

}  // namespace

TEST_CASE("validate accepts monotone flag data") {
  const WeightType one_point = WeightType::of({2});
  CHECK(validate(2, {{1}}, one_point).rank() == 2);

  const WeightType two_points = WeightType::of({3, 2});
  const DimVector v = validate(3, {{2, 1}, {3}}, two_points);
  CHECK(v.entry(0, 0) == 3);
  CHECK(v.entry(0, 2) == 1);
  CHECK(v.entry(0, 3) == 0);
  CHECK(v.entry(1, 1) == 3);
}

TEST_CASE("validate rejects bad shapes and non-monotone rows") {
  const WeightType one_point = WeightType::of({2});
  CHECK_THROWS_AS(validate(1, {{2}}, one_point), NotMonotone);
  CHECK_THROWS_AS(validate(2, {{1}, {1}}, one_point), ShapeMismatch);
  CHECK_THROWS_AS(validate(2, {{1, 1}}, one_point), ShapeMismatch);
  CHECK_THROWS_AS(validate(2, {}, one_point), ShapeMismatch);
  CHECK_THROWS_AS(validate(3, {{1, 2}}, WeightType::of({3})), NotMonotone);
  CHECK_THROWS_AS(validate(2, {{-1}}, one_point), NotMonotone);
  CHECK_THROWS_AS(validate(-1, {}), NotMonotone);
  CHECK_THROWS_AS(WeightType::of({0}), DomainError);
}

TEST_CASE("euler form worked values") {
  CHECK(euler_form(dv(2, {}), dv(3, {})) == 6);
  CHECK(euler_form(dv(2, {{1}}), dv(2, {{1}})) == 3);
  const DimVector four_points = dv(2, {{1}, {1}, {1}, {1}});
  CHECK(euler_form(four_points, four_points) == 0);
}

TEST_CASE("euler form requires a shared weight type") {
  CHECK_THROWS_AS(euler_form(dv(2, {}), dv(2, {{1}})), WeightTypeMismatch);
  CHECK_THROWS_AS(euler_form(dv(2, {{1}}), dv(2, {{1, 0}})), WeightTypeMismatch);
}

TEST_CASE("q and p") {
  CHECK(q(dv(3, {})) == 9);
  CHECK(p(dv(3, {})) == -8);
  CHECK(q(dv(2, {{1}, {1}, {1}})) == 1);
  CHECK(p(dv(2, {{1}, {1}, {1}})) == 0);
}

TEST_CASE("q is 1 on every rank-1 vector") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightType wt = testing::random_weight_type(rng, 4, 4);
    const DimVector a = testing::random_vector(rng, wt, 1, 1);
    CHECK(q(a) == 1);
    CHECK(p(a) == 0);
  }
}

TEST_CASE("sym form") {
  CHECK(sym_form(dv(1, {}), dv(1, {})) == 2);
  CHECK(sym_form(dv(1, {{1}}), dv(1, {{0}})) == 1);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightType wt = testing::random_weight_type(rng, 3, 3);
    const DimVector a = testing::random_vector(rng, wt, 0, 4);
    const DimVector b = testing::random_vector(rng, wt, 0, 4);
    CHECK(sym_form(a, b) == sym_form(b, a));
    CHECK(sym_form(a, a) == 2 * q(a));
  }
}

TEST_CASE("chi_hom worked values") {
  CHECK(chi_hom(SheafDatum{dv(1, {}), 0}, SheafDatum{dv(1, {}), 3}, 1) == 3);
  CHECK(chi_hom(SheafDatum{dv(1, {{0}}), 0}, SheafDatum{dv(2, {{1}}), 1}, 0) == 3);
}

TEST_CASE("chi_hom of a sheaf against itself is minus the bundle stack dimension") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightType wt = testing::random_weight_type(rng, 3, 3);
    const DimVector a = testing::random_vector(rng, wt, 0, 4);
    std::uniform_int_distribution<std::int64_t> deg(-5, 5);
    std::uniform_int_distribution<int> genus(0, 3);
    const int g = genus(rng);
    const SheafDatum s{a, deg(rng)};
    CHECK(chi_hom(s, s, g) == -(g * a.rank() * a.rank() - q(a)));
  }
}

TEST_CASE("bilinearity of the euler form") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightType wt = testing::random_weight_type(rng, 3, 3);
    const DimVector a = testing::random_vector(rng, wt, 0, 3);
    const DimVector b = testing::random_vector(rng, wt, 0, 3);
    const DimVector c = testing::random_vector(rng, wt, 0, 3);
    CHECK(euler_form(add(a, b), c) == euler_form(a, c) + euler_form(b, c));
    CHECK(euler_form(c, add(a, b)) == euler_form(c, a) + euler_form(c, b));
  }
}

TEST_CASE("euler form is bounded by the rank product") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const WeightType wt = testing::random_weight_type(rng, 3, 3);
    const DimVector a = testing::random_vector(rng, wt, 0, 4);
    const DimVector b = testing::random_vector(rng, wt, 0, 4);
    CHECK(euler_form(a, b) <= a.rank() * b.rank());
  }
}

TEST_CASE("appending a flagless point changes nothing") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightType wt = testing::random_weight_type(rng, 3, 3);
    const DimVector a = testing::random_vector(rng, wt, 0, 4);
    const DimVector b = testing::random_vector(rng, wt, 0, 4);

    std::vector<int> extended_lens = wt.flag_lens();
    extended_lens.push_back(1);
    const WeightType wt1 = WeightType::of(extended_lens);
    Rows ra = a.rows();
    ra.emplace_back();
    Rows rb = b.rows();
    rb.emplace_back();
    const DimVector a1 = validate(a.rank(), ra, wt1);
    const DimVector b1 = validate(b.rank(), rb, wt1);

    CHECK(euler_form(a1, b1) == euler_form(a, b));
    CHECK(q(a1) == q(a));
    CHECK(p(a1) == p(a));
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  const DimVector huge = dv(4'000'000'000LL, {});
  CHECK_THROWS_AS(q(huge), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), OverflowError);
}

TEST_CASE("canonical comparison orders by rank, then flattened rows") {
  CHECK(dv(2, {{1}}) > dv(1, {{1}}));
  CHECK(dv(2, {{2}}) > dv(2, {{1}}));
  CHECK(dv(1, {{1}, {0}}) > dv(1, {{0}, {1}}));
  CHECK(dv(1, {{1}}) == dv(1, {{1}}));
}
