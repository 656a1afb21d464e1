#ifndef PARASTACK_GOODNESS_HPP
#define PARASTACK_GOODNESS_HPP

#include <optional>
#include <string_view>

#include "parastack/decomp.hpp"
#include "parastack/dims.hpp"

namespace parastack {

enum class Classification { AlmostVeryGood, AlmostGoodOnly, NotAlmostGood };

std::string_view classification_name(Classification c);
std::optional<Classification> classification_from_name(std::string_view name);

/// margin = dim_inertia_excess - 1 - dim_bun, the "-1" absorbing the
/// scalar automorphisms every parabolic bundle has. margin < 0 means
/// almost very good, = 0 almost good only, > 0 neither. A nullopt margin
/// means the non-scalar inertia locus is empty (rank 1) and the
/// classification is vacuously AlmostVeryGood.
struct Verdict {
  Classification classification = Classification::AlmostVeryGood;
  std::optional<std::int64_t> margin;
  std::optional<Decomposition> witness;

  bool operator==(const Verdict&) const = default;
};

/// The main criterion, for any genus. Throws ZeroRank on rank 0.
Verdict decide(const DimVector& a, int genus);

struct GoodnessPair {
  bool almost_good = false;
  bool almost_very_good = false;

  bool operator==(const GoodnessPair&) const = default;
};

/// Genus-0 cross-check: almost very good iff p(a) > sum_l p(b^l) against
/// every decomposition into >= 2 positive parts (>= for almost good).
/// Vacuously (true, true) for rank 1. Must agree with decide(a, 0).
GoodnessPair check_g0(const DimVector& a);

/// Genus-1 cross-check via the expanded cross-term inequality
///   0 < 1 - t + sum_{l != m} sum_{i,j} (b^l_{ij} - b^l_{i,j+1}) b^m_{i,j+1}
/// required for every decomposition into >= 2 positive parts (>= 0 for
/// almost good). Must agree with decide(a, 1).
GoodnessPair check_g1(const DimVector& a);

/// For genus >= 2 the stack is almost very good with no condition on the
/// parabolic structure. Independently coded fast path; tests compare it
/// against decide. Throws GenusTooLow when genus < 2.
Classification check_g_high(const DimVector& a, int genus);

}  // namespace parastack

#endif
