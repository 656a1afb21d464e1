#include "parastack/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace parastack {

Decomposition canonicalized(std::vector<DimVector> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Decomposition{std::move(parts)};
}

DimVector sum_parts(const Decomposition& d) {
  if (d.parts.empty()) throw DomainError("cannot sum an empty decomposition");
  DimVector acc = d.parts.front();
  for (std::size_t l = 1; l < d.parts.size(); ++l) acc = add(acc, d.parts[l]);
  return acc;
}

std::string to_string(const Decomposition& d) {
  std::ostringstream os;
  for (std::size_t l = 0; l < d.parts.size(); ++l) {
    if (l) os << " + ";
    os << to_string(d.parts[l]);
  }
  return os.str();
}

namespace {

// All fillings of one flag row for a part of rank s carved out of the
// residual row rho, in descending lexicographic order. A filling x must
// keep both the part (s >= x_1 >= ... >= 0) and the remainder
// (rho_head - s >= rho_1 - x_1 >= ... >= 0) monotone.
void row_fillings(std::int64_t s, std::int64_t rho_head,
                  const std::vector<std::int64_t>& rho, std::size_t pos,
                  std::vector<std::int64_t>& x,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (pos == rho.size()) {
    out.push_back(x);
    return;
  }
  const std::int64_t part_prev = pos == 0 ? s : x[pos - 1];
  const std::int64_t rho_prev = pos == 0 ? rho_head : rho[pos - 1];
  const std::int64_t hi = std::min(part_prev, rho[pos]);
  const std::int64_t lo = std::max<std::int64_t>(0, part_prev - (rho_prev - rho[pos]));
  for (std::int64_t v = hi; v >= lo; --v) {
    x[pos] = v;
    row_fillings(s, rho_head, rho, pos + 1, x, out);
  }
}

// Valid positive-rank parts pi with pi <= bound in the canonical order,
// such that residual - pi is itself a valid vector. Descending canonical
// order; bound == nullptr means unbounded above.
std::vector<DimVector> next_parts(const DimVector& residual, const DimVector* bound) {
  std::vector<DimVector> result;
  const std::int64_t max_rank =
      bound ? std::min(bound->rank(), residual.rank()) : residual.rank();
  const int k = residual.points();
  for (std::int64_t s = max_rank; s >= 1; --s) {
    std::vector<std::vector<std::vector<std::int64_t>>> options(
        static_cast<std::size_t>(k));
    bool feasible = true;
    for (int i = 0; i < k && feasible; ++i) {
      const auto& rho = residual.rows()[static_cast<std::size_t>(i)];
      std::vector<std::int64_t> x(rho.size());
      row_fillings(s, residual.rank(), rho, 0, x, options[static_cast<std::size_t>(i)]);
      feasible = !options[static_cast<std::size_t>(i)].empty();
    }
    if (!feasible) continue;

    // Row-major odometer over the per-point option lists keeps the
    // rank-s candidates in descending canonical order.
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      Rows rows;
      rows.reserve(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        rows.push_back(options[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
      }
      DimVector cand = validate(s, std::move(rows));
      if (!bound || !(cand > *bound)) result.push_back(std::move(cand));

      int i = k - 1;
      while (i >= 0 && ++idx[static_cast<std::size_t>(i)] ==
                           options[static_cast<std::size_t>(i)].size()) {
        idx[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return result;
}

struct Enumeration {
  std::int64_t min_parts;
  std::int64_t max_parts;
  const DecompVisitor& visit;
  std::vector<DimVector> chosen;

  // Returns false once the consumer has asked to stop.
  bool descend(const DimVector& residual, const DimVector* bound) {
    if (residual.rank() == 0) {
      // A valid rank-0 vector is the zero vector, so the sum is complete.
      if (static_cast<std::int64_t>(chosen.size()) >= min_parts) {
        return visit(Decomposition{chosen});
      }
      return true;
    }
    if (static_cast<std::int64_t>(chosen.size()) >= max_parts) return true;
    // Each further part has rank >= 1, so at most residual.rank() can follow.
    if (static_cast<std::int64_t>(chosen.size()) + residual.rank() < min_parts) return true;

    for (const DimVector& cand : next_parts(residual, bound)) {
      auto rest = try_sub(residual, cand);
      chosen.push_back(cand);
      const bool keep_going = descend(*rest, &cand);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_decomposition(const DimVector& target, int min_parts,
                            std::optional<int> max_parts, const DecompVisitor& visit) {
  if (min_parts < 1) throw InvalidBounds("min_parts must be at least 1");
  if (max_parts && *max_parts < min_parts) {
    throw InvalidBounds("max_parts must not be below min_parts");
  }
  Enumeration e{min_parts,
                max_parts ? static_cast<std::int64_t>(*max_parts)
                          : std::numeric_limits<std::int64_t>::max(),
                visit,
                {}};
  e.descend(target, nullptr);
}

std::vector<Decomposition> decompositions(const DimVector& target, int min_parts,
                                          std::optional<int> max_parts) {
  std::vector<Decomposition> all;
  for_each_decomposition(target, min_parts, max_parts, [&](const Decomposition& d) {
    all.push_back(d);
    return true;
  });
  return all;
}

std::int64_t count_decompositions(const DimVector& target, int min_parts,
                                  std::optional<int> max_parts) {
  std::int64_t n = 0;
  for_each_decomposition(target, min_parts, max_parts, [&](const Decomposition&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace parastack
