#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "parastack/dims.hpp"
#include "parastack/oracle.hpp"
#include "parastack/scan.hpp"

using namespace parastack;

namespace {

DimVector dv(std::int64_t rank, Rows rows) { return validate(rank, std::move(rows)); }

Decomposition parts(std::vector<DimVector> v) { return Decomposition{std::move(v)}; }

}  // namespace

TEST_CASE("dim_bun worked values") {
  CHECK(dim_bun(dv(1, {}), 1) == 0);
  CHECK(dim_bun(dv(2, {{1}}), 0) == -3);
  CHECK(dim_bun(dv(2, {}), 2) == 4);
}

TEST_CASE("nilpotent stack dimension") {
  const DimVector two = dv(2, {});
  const DimResult g1 = dim_nilpotent_stack(two, 1);
  CHECK(g1.value == 0);
  CHECK(g1.witness == parts({two}));  // tie with the split; canonical-first wins

  const DimResult g0 = dim_nilpotent_stack(two, 0);
  CHECK(g0.value == -2);
  CHECK(g0.witness == parts({dv(1, {}), dv(1, {})}));

  const DimResult g2 = dim_nilpotent_stack(two, 2);
  CHECK(g2.value == 4);
  CHECK(g2.witness == parts({two}));
}

TEST_CASE("pairs stack dimension") {
  const DimResult line = dim_pairs_stack(dv(1, {}), 1);
  CHECK(line.value == 1);
  CHECK(line.witness == parts({dv(1, {})}));

  const DimResult g0 = dim_pairs_stack(dv(2, {}), 0);
  CHECK(g0.value == 0);
  CHECK(g0.witness == parts({dv(1, {}), dv(1, {})}));

  // Exhaustive evaluation resolves the tie structure: the one-part
  // decomposition gives 1, every rank-1 split gives 0.
  const DimVector four_points = dv(2, {{1}, {1}, {1}, {1}});
  const DimResult p4 = dim_pairs_stack(four_points, 0);
  CHECK(p4.value == 1);
  CHECK(p4.witness == parts({four_points}));
}

TEST_CASE("inertia excess dimension") {
  for (int g = 0; g <= 3; ++g) {
    const DimResult empty = dim_inertia_excess(dv(1, {}), g);
    CHECK(!empty.value);
    CHECK(!empty.witness);
  }
  CHECK(dim_inertia_excess(dv(2, {}), 0).value == 0);
  CHECK(dim_inertia_excess(dv(2, {{1}, {1}, {1}, {1}}), 0).value == 0);
}

TEST_CASE("published dims bundle for rank 2 at genus 2") {
  const StackDims d = stack_dims(dv(2, {}), 2);
  CHECK(d.bun == 4);
  CHECK(d.nilpotent.value == 4);
  CHECK(d.pairs.value == 5);
  CHECK(d.inertia_excess.value == 4);
}

TEST_CASE("rank 0 and negative genus are rejected") {
  CHECK_THROWS_AS(dim_nilpotent_stack(dv(0, {}), 1), ZeroRank);
  CHECK_THROWS_AS(dim_pairs_stack(dv(0, {}), 1), ZeroRank);
  CHECK_THROWS_AS(dim_inertia_excess(dv(0, {}), 1), ZeroRank);
  CHECK_THROWS_AS(dim_bun(dv(2, {}), -1), DomainError);
}

TEST_CASE("maxima agree with naive enumeration over the full grid") {
  const std::vector<DimVector> vectors = grid_all_vectors(GridBounds{4, 3, 3});
  std::atomic<long> failures{0};

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t vi = 0; vi < static_cast<std::ptrdiff_t>(vectors.size()); ++vi) {
    const DimVector& a = vectors[static_cast<std::size_t>(vi)];
    const auto all = oracle_decompositions(a, 1, std::nullopt);
    for (int g = 0; g <= 3; ++g) {
      std::optional<std::int64_t> nilp, pairs, excess;
      for (const Decomposition& d : all) {
        std::int64_t base = 0;
        for (const DimVector& part : d.parts) base += g * part.rank() * part.rank() - q(part);
        if (!nilp || base > *nilp) nilp = base;
        if (!pairs || base + d.t() > *pairs) pairs = base + d.t();
        if (d.t() >= 2 && (!excess || base + d.t() > *excess)) excess = base + d.t();
      }
      const StackDims got = stack_dims(a, g);
      if (got.nilpotent.value != nilp || got.pairs.value != pairs ||
          got.inertia_excess.value != excess) {
        ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("ordering and monotonicity invariants on a small grid") {
  for (const WeightType& wt : grid_weight_types(2, 3)) {
    for (const DimVector& a : grid_vectors(wt, 3)) {
      std::optional<std::int64_t> prev_excess;
      for (int g = 0; g <= 3; ++g) {
        const StackDims d = stack_dims(a, g);
        CHECK(*d.nilpotent.value >= d.bun);
        CHECK(*d.pairs.value >= 1 + d.bun);
        CHECK(nilpotent_objective(*d.nilpotent.witness, g) == *d.nilpotent.value);
        CHECK(pairs_objective(*d.pairs.witness, g) == *d.pairs.value);
        if (d.inertia_excess.value) {
          CHECK(*d.pairs.value >= *d.inertia_excess.value);
          CHECK(pairs_objective(*d.inertia_excess.witness, g) == *d.inertia_excess.value);
          if (prev_excess && a.rank() >= 2) {
            CHECK(*d.inertia_excess.value <=
                  *prev_excess + a.rank() * a.rank() - 2);
            CHECK(*d.inertia_excess.value >= *prev_excess);
          }
          prev_excess = d.inertia_excess.value;
        }
        if (g > 0) {
          CHECK(*d.nilpotent.value >= *stack_dims(a, g - 1).nilpotent.value);
          CHECK(*d.pairs.value >= *stack_dims(a, g - 1).pairs.value);
        }
      }
    }
  }
}
