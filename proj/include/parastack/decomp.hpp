#ifndef PARASTACK_DECOMP_HPP
#define PARASTACK_DECOMP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parastack/core.hpp"

namespace parastack {

/// A multiset of positive-rank valid dimension vectors summing to some
/// target, stored sorted non-increasing in the canonical order of
/// DimVector. Two decompositions are equal iff their part lists are.
struct Decomposition {
  std::vector<DimVector> parts;

  int t() const { return static_cast<int>(parts.size()); }
  auto operator<=>(const Decomposition&) const = default;
};

/// Sorts parts into canonical non-increasing order.
Decomposition canonicalized(std::vector<DimVector> parts);

/// Componentwise sum of the parts; throws DomainError on an empty list.
DimVector sum_parts(const Decomposition& d);

std::string to_string(const Decomposition& d);

/// Visitor returns false to stop the enumeration early.
using DecompVisitor = std::function<bool(const Decomposition&)>;

/// Streams every decomposition of target into between min_parts and
/// max_parts (nullopt = unbounded) positive-rank valid parts, each
/// exactly once, ordered by descending part sequences. Nothing is
/// precomputed; stopping the visitor abandons the remaining stream.
/// Throws InvalidBounds when min_parts < 1 or max_parts < min_parts.
void for_each_decomposition(const DimVector& target, int min_parts,
                            std::optional<int> max_parts,
                            const DecompVisitor& visit);

/// Collects the full stream, in stream order.
std::vector<Decomposition> decompositions(const DimVector& target, int min_parts,
                                          std::optional<int> max_parts);

std::int64_t count_decompositions(const DimVector& target, int min_parts,
                                  std::optional<int> max_parts);

}  // namespace parastack

#endif
