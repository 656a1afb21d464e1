#include "parastack/dims.hpp"

namespace parastack {

namespace {

void require_decidable(const DimVector& a, int genus) {
  if (a.rank() == 0) throw ZeroRank("rank must be positive");
  if (genus < 0) throw DomainError("genus must be nonnegative");
}

template <typename Objective>
DimResult maximize(const DimVector& a, int min_parts, const Objective& objective) {
  DimResult best;
  for_each_decomposition(a, min_parts, std::nullopt, [&](const Decomposition& d) {
    const std::int64_t v = objective(d);
    if (!best.value || v > *best.value) {
      best.value = v;
      best.witness = d;
    }
    return true;
  });
  return best;
}

}  // namespace

std::int64_t dim_bun(const DimVector& a, int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  return checked_sub(checked_mul(genus, checked_mul(a.rank(), a.rank())), q(a));
}

std::int64_t nilpotent_objective(const Decomposition& d, int genus) {
  std::int64_t acc = 0;
  for (const DimVector& part : d.parts) {
    const std::int64_t sq = checked_mul(part.rank(), part.rank());
    acc = checked_add(acc, checked_sub(checked_mul(genus, sq), q(part)));
  }
  return acc;
}

std::int64_t pairs_objective(const Decomposition& d, int genus) {
  return checked_add(d.t(), nilpotent_objective(d, genus));
}

DimResult dim_nilpotent_stack(const DimVector& a, int genus) {
  require_decidable(a, genus);
  return maximize(a, 1, [&](const Decomposition& d) { return nilpotent_objective(d, genus); });
}

DimResult dim_pairs_stack(const DimVector& a, int genus) {
  require_decidable(a, genus);
  return maximize(a, 1, [&](const Decomposition& d) { return pairs_objective(d, genus); });
}

DimResult dim_inertia_excess(const DimVector& a, int genus) {
  require_decidable(a, genus);
  return maximize(a, 2, [&](const Decomposition& d) { return pairs_objective(d, genus); });
}

StackDims stack_dims(const DimVector& a, int genus) {
  require_decidable(a, genus);
  return StackDims{dim_bun(a, genus), dim_nilpotent_stack(a, genus),
                   dim_pairs_stack(a, genus), dim_inertia_excess(a, genus), genus};
}

}  // namespace parastack
