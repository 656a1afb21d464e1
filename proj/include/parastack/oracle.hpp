#ifndef PARASTACK_ORACLE_HPP
#define PARASTACK_ORACLE_HPP

#include <optional>
#include <set>

#include "parastack/decomp.hpp"
#include "parastack/goodness.hpp"

namespace parastack {

// Deliberately naive reference implementations used to certify the
// enumerator and the maximizers. Nothing here shares logic with decomp,
// dims, or goodness beyond the core form arithmetic and the value types.

/// Generates every ORDERED tuple of valid positive-rank parts summing to
/// target by unrestricted recursion over componentwise-smaller valid
/// vectors, then canonicalizes and deduplicates into a set.
std::set<Decomposition> oracle_decompositions(const DimVector& target, int min_parts,
                                              std::optional<int> max_parts);

/// Re-derives the verdict by evaluating the main inequality at every
/// oracle decomposition with t >= 2. Must equal decide() everywhere.
Verdict oracle_decide(const DimVector& a, int genus);

/// Evaluation core of oracle_decide against a precomputed set of
/// two-or-more-part decompositions, as produced by
/// oracle_decompositions(a, 2, nullopt). Lets grid sweeps enumerate once
/// per vector instead of once per genus.
Verdict oracle_decide(const DimVector& a, int genus,
                      const std::set<Decomposition>& two_part_decs);

}  // namespace parastack

#endif
