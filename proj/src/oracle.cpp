#include "parastack/oracle.hpp"

#include <limits>

namespace parastack {

namespace {

// Raw residual state: rank plus flag entries with no monotonicity
// assumption (intermediate residuals of ordered tuples need not be valid
// vectors).
struct Raw {
  std::int64_t rank;
  Rows rows;
};

bool all_zero(const Raw& r) {
  for (const auto& row : r.rows) {
    for (std::int64_t x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

// Every monotone filling of one row under the per-entry caps.
void naive_row(std::int64_t s, const std::vector<std::int64_t>& cap, std::size_t pos,
               std::vector<std::int64_t>& x, std::vector<std::vector<std::int64_t>>& out) {
  if (pos == cap.size()) {
    out.push_back(x);
    return;
  }
  const std::int64_t hi = std::min(pos == 0 ? s : x[pos - 1], cap[pos]);
  for (std::int64_t v = 0; v <= hi; ++v) {
    x[pos] = v;
    naive_row(s, cap, pos + 1, x, out);
  }
}

// Every valid vector with rank in [1, residual.rank] fitting under the
// residual entries.
std::vector<DimVector> naive_parts(const Raw& residual) {
  std::vector<DimVector> parts;
  for (std::int64_t s = 1; s <= residual.rank; ++s) {
    std::vector<std::vector<std::vector<std::int64_t>>> options(residual.rows.size());
    bool feasible = true;
    for (std::size_t i = 0; i < residual.rows.size() && feasible; ++i) {
      std::vector<std::int64_t> x(residual.rows[i].size());
      naive_row(s, residual.rows[i], 0, x, options[i]);
      feasible = !options[i].empty();
    }
    if (!feasible) continue;
    std::vector<std::size_t> idx(residual.rows.size(), 0);
    while (true) {
      Rows rows;
      rows.reserve(residual.rows.size());
      for (std::size_t i = 0; i < residual.rows.size(); ++i) rows.push_back(options[i][idx[i]]);
      parts.push_back(validate(s, std::move(rows)));
      std::size_t i = residual.rows.size();
      while (i > 0 && ++idx[i - 1] == options[i - 1].size()) {
        idx[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return parts;
}

void expand(const Raw& residual, std::int64_t min_parts, std::int64_t max_parts,
            std::vector<DimVector>& chosen, std::set<Decomposition>& out) {
  if (residual.rank == 0) {
    if (all_zero(residual) && static_cast<std::int64_t>(chosen.size()) >= min_parts) {
      out.insert(canonicalized(chosen));
    }
    return;
  }
  if (static_cast<std::int64_t>(chosen.size()) >= max_parts) return;
  for (const DimVector& part : naive_parts(residual)) {
    Raw rest{residual.rank - part.rank(), residual.rows};
    for (std::size_t i = 0; i < rest.rows.size(); ++i) {
      for (std::size_t j = 0; j < rest.rows[i].size(); ++j) {
        rest.rows[i][j] -= part.rows()[i][j];
      }
    }
    chosen.push_back(part);
    expand(rest, min_parts, max_parts, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::set<Decomposition> oracle_decompositions(const DimVector& target, int min_parts,
                                              std::optional<int> max_parts) {
  if (min_parts < 1) throw InvalidBounds("min_parts must be at least 1");
  if (max_parts && *max_parts < min_parts) {
    throw InvalidBounds("max_parts must not be below min_parts");
  }
  std::set<Decomposition> out;
  std::vector<DimVector> chosen;
  expand(Raw{target.rank(), target.rows()}, min_parts,
         max_parts ? static_cast<std::int64_t>(*max_parts)
                   : std::numeric_limits<std::int64_t>::max(),
         chosen, out);
  return out;
}

Verdict oracle_decide(const DimVector& a, int genus) {
  return oracle_decide(a, genus, oracle_decompositions(a, 2, std::nullopt));
}

Verdict oracle_decide(const DimVector& a, int genus, const std::set<Decomposition>& decs) {
  if (a.rank() == 0) throw ZeroRank("rank must be positive");
  if (genus < 0) throw DomainError("genus must be nonnegative");
  if (decs.empty()) {
    return Verdict{Classification::AlmostVeryGood, std::nullopt, std::nullopt};
  }
  const std::int64_t bun =
      checked_sub(checked_mul(genus, checked_mul(a.rank(), a.rank())), q(a));
  std::optional<std::int64_t> best;
  std::optional<Decomposition> arg;
  // Reverse set order is descending part sequences, i.e. stream order;
  // keeping strict improvements reproduces the canonical-first witness.
  for (auto it = decs.rbegin(); it != decs.rend(); ++it) {
    std::int64_t v = it->t();
    for (const DimVector& part : it->parts) {
      const std::int64_t sq = checked_mul(part.rank(), part.rank());
      v = checked_add(v, checked_sub(checked_mul(genus, sq), q(part)));
    }
    if (!best || v > *best) {
      best = v;
      arg = *it;
    }
  }
  const std::int64_t margin = checked_sub(checked_sub(*best, 1), bun);
  const Classification cls = margin < 0   ? Classification::AlmostVeryGood
                             : margin > 0 ? Classification::NotAlmostGood
                                          : Classification::AlmostGoodOnly;
  return Verdict{cls, margin, arg};
}

}  // namespace parastack
