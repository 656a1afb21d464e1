#include "parastack/goodness.hpp"

namespace parastack {

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::AlmostVeryGood: return "almost-very-good";
    case Classification::AlmostGoodOnly: return "almost-good-only";
    case Classification::NotAlmostGood: return "not-almost-good";
  }
  return "unknown";
}

std::optional<Classification> classification_from_name(std::string_view name) {
  if (name == "almost-very-good") return Classification::AlmostVeryGood;
  if (name == "almost-good-only") return Classification::AlmostGoodOnly;
  if (name == "not-almost-good") return Classification::NotAlmostGood;
  return std::nullopt;
}

Verdict decide(const DimVector& a, int genus) {
  if (a.rank() == 0) throw ZeroRank("rank must be positive");
  if (genus < 0) throw DomainError("genus must be nonnegative");
  const std::int64_t bun = dim_bun(a, genus);
  const DimResult excess = dim_inertia_excess(a, genus);
  if (!excess.value) {
    return Verdict{Classification::AlmostVeryGood, std::nullopt, std::nullopt};
  }
  const std::int64_t margin = checked_sub(checked_sub(*excess.value, 1), bun);
  const Classification cls = margin < 0   ? Classification::AlmostVeryGood
                             : margin > 0 ? Classification::NotAlmostGood
                                          : Classification::AlmostGoodOnly;
  return Verdict{cls, margin, excess.witness};
}

GoodnessPair check_g0(const DimVector& a) {
  if (a.rank() == 0) throw ZeroRank("rank must be positive");
  std::optional<std::int64_t> worst;  // largest sum of p over the parts
  for_each_decomposition(a, 2, std::nullopt, [&](const Decomposition& d) {
    std::int64_t sum = 0;
    for (const DimVector& part : d.parts) sum = checked_add(sum, p(part));
    if (!worst || sum > *worst) worst = sum;
    return true;
  });
  if (!worst) return GoodnessPair{true, true};
  const std::int64_t pa = p(a);
  return GoodnessPair{pa >= *worst, pa > *worst};
}

GoodnessPair check_g1(const DimVector& a) {
  if (a.rank() == 0) throw ZeroRank("rank must be positive");
  std::optional<std::int64_t> worst;  // smallest value of 1 - t + cross terms
  for_each_decomposition(a, 2, std::nullopt, [&](const Decomposition& d) {
    std::int64_t cross = 0;
    for (int l = 0; l < d.t(); ++l) {
      for (int m = 0; m < d.t(); ++m) {
        if (m == l) continue;
        const DimVector& bl = d.parts[static_cast<std::size_t>(l)];
        const DimVector& bm = d.parts[static_cast<std::size_t>(m)];
        for (int i = 0; i < bl.points(); ++i) {
          for (int j = 0; j < bl.flag_len(i); ++j) {
            const std::int64_t step = checked_sub(bl.entry(i, j), bl.entry(i, j + 1));
            cross = checked_add(cross, checked_mul(step, bm.entry(i, j + 1)));
          }
        }
      }
    }
    const std::int64_t v = checked_add(checked_sub(1, d.t()), cross);
    if (!worst || v < *worst) worst = v;
    return true;
  });
  if (!worst) return GoodnessPair{true, true};
  return GoodnessPair{*worst >= 0, *worst > 0};
}

Classification check_g_high(const DimVector& a, int genus) {
  if (genus < 2) throw GenusTooLow("check_g_high needs genus >= 2");
  if (a.rank() == 0) throw ZeroRank("rank must be positive");
  return Classification::AlmostVeryGood;
}

}  // namespace parastack
