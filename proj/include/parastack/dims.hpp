#ifndef PARASTACK_DIMS_HPP
#define PARASTACK_DIMS_HPP

#include <optional>

#include "parastack/core.hpp"
#include "parastack/decomp.hpp"

namespace parastack {

/// Result of a maximization over decompositions. value is nullopt exactly
/// when no qualifying decomposition exists (the locus is empty); witness
/// is the first maximizer in stream order.
struct DimResult {
  std::optional<std::int64_t> value;
  std::optional<Decomposition> witness;

  bool operator==(const DimResult&) const = default;
};

/// dim of the moduli stack of parabolic bundles: g a_0^2 - q(a).
std::int64_t dim_bun(const DimVector& a, int genus);

/// g * sum of squared part ranks - sum of q over the parts.
std::int64_t nilpotent_objective(const Decomposition& d, int genus);

/// t + nilpotent_objective.
std::int64_t pairs_objective(const Decomposition& d, int genus);

/// dim of the stack of (bundle, nilpotent endomorphism) pairs: the
/// nilpotent objective maximized over decompositions with t >= 1.
DimResult dim_nilpotent_stack(const DimVector& a, int genus);

/// dim of the stack of (bundle, endomorphism) pairs: the pairs objective
/// maximized over decompositions with t >= 1.
DimResult dim_pairs_stack(const DimVector& a, int genus);

/// dim of the non-scalar part of the inertia stack: the pairs objective
/// maximized over decompositions with t >= 2. Empty (nullopt) for rank 1,
/// where no such decomposition exists.
DimResult dim_inertia_excess(const DimVector& a, int genus);

struct StackDims {
  std::int64_t bun = 0;
  DimResult nilpotent;
  DimResult pairs;
  DimResult inertia_excess;
  int genus = 0;
};

StackDims stack_dims(const DimVector& a, int genus);

}  // namespace parastack

#endif
