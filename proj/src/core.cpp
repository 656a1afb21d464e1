#include "parastack/core.hpp"

#include <sstream>

namespace parastack {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

WeightType WeightType::of(std::vector<int> flag_lens) {
  for (int w : flag_lens) {
    if (w < 1) throw DomainError("flag length must be at least 1, got " + std::to_string(w));
  }
  WeightType wt;
  wt.flag_lens_ = std::move(flag_lens);
  return wt;
}

namespace {

bool row_monotone(std::int64_t rank, const std::vector<std::int64_t>& row) {
  std::int64_t prev = rank;
  for (std::int64_t x : row) {
    if (x < 0 || x > prev) return false;
    prev = x;
  }
  return true;
}

}  // namespace

DimVector validate(std::int64_t rank, Rows rows, const WeightType& wt) {
  if (static_cast<int>(rows.size()) != wt.points()) {
    throw ShapeMismatch("expected " + std::to_string(wt.points()) + " flag rows, got " +
                        std::to_string(rows.size()));
  }
  for (int i = 0; i < wt.points(); ++i) {
    const auto expected = static_cast<std::size_t>(wt.flag_len(i) - 1);
    if (rows[static_cast<std::size_t>(i)].size() != expected) {
      throw ShapeMismatch("row " + std::to_string(i) + " must hold " + std::to_string(expected) +
                          " entries for flag length " + std::to_string(wt.flag_len(i)));
    }
  }
  return validate(rank, std::move(rows));
}

DimVector validate(std::int64_t rank, Rows rows) {
  if (rank < 0) throw NotMonotone("rank must be nonnegative, got " + std::to_string(rank));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!row_monotone(rank, rows[i])) {
      throw NotMonotone("row " + std::to_string(i) + " is not monotone under rank " +
                        std::to_string(rank));
    }
  }
  return DimVector(rank, std::move(rows));
}

std::int64_t DimVector::entry(int i, int j) const {
  if (j == 0) return rank_;
  const auto& row = rows_[static_cast<std::size_t>(i)];
  if (j == static_cast<int>(row.size()) + 1) return 0;
  return row[static_cast<std::size_t>(j - 1)];
}

WeightType DimVector::weight_type() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()) + 1);
  return WeightType::of(std::move(lens));
}

bool DimVector::same_shape(const DimVector& o) const {
  if (rows_.size() != o.rows_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != o.rows_[i].size()) return false;
  }
  return true;
}

DimVector add(const DimVector& a, const DimVector& b) {
  if (!a.same_shape(b)) throw WeightTypeMismatch("cannot add vectors of different weight types");
  Rows rows = a.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      rows[i][j] = checked_add(rows[i][j], b.rows()[i][j]);
    }
  }
  return validate(checked_add(a.rank(), b.rank()), std::move(rows));
}

std::optional<DimVector> try_sub(const DimVector& a, const DimVector& b) {
  if (!a.same_shape(b)) throw WeightTypeMismatch("cannot subtract vectors of different weight types");
  const std::int64_t rank = a.rank() - b.rank();
  if (rank < 0) return std::nullopt;
  Rows rows = a.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::int64_t prev = rank;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      rows[i][j] -= b.rows()[i][j];
      if (rows[i][j] < 0 || rows[i][j] > prev) return std::nullopt;
      prev = rows[i][j];
    }
  }
  return validate(rank, std::move(rows));
}

std::int64_t euler_form(const DimVector& a, const DimVector& b) {
  if (!a.same_shape(b)) throw WeightTypeMismatch("euler form needs a shared weight type");
  std::int64_t acc = checked_mul(a.rank(), b.rank());
  for (int i = 0; i < a.points(); ++i) {
    const int w = a.flag_len(i);
    for (int j = 0; j < w; ++j) {
      const std::int64_t step = checked_sub(b.entry(i, j + 1), b.entry(i, j));
      acc = checked_add(acc, checked_mul(step, a.entry(i, j + 1)));
    }
  }
  return acc;
}

std::int64_t q(const DimVector& a) { return euler_form(a, a); }

std::int64_t p(const DimVector& a) { return checked_sub(1, q(a)); }

std::int64_t sym_form(const DimVector& a, const DimVector& b) {
  return checked_add(euler_form(a, b), euler_form(b, a));
}

std::int64_t chi_hom(const SheafDatum& f, const SheafDatum& e, int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  const DimVector& beta = f.dimvec;
  const DimVector& alpha = e.dimvec;
  std::int64_t acc = checked_sub(checked_mul(beta.rank(), e.degree),
                                 checked_mul(alpha.rank(), f.degree));
  acc = checked_sub(acc, checked_mul(genus, checked_mul(alpha.rank(), beta.rank())));
  return checked_add(acc, euler_form(beta, alpha));
}

std::string to_string(const WeightType& wt) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < wt.points(); ++i) {
    if (i) os << ',';
    os << wt.flag_len(i);
  }
  os << ']';
  return os.str();
}

std::string to_string(const DimVector& v) {
  std::ostringstream os;
  os << '(' << v.rank() << ';';
  for (int i = 0; i < v.points(); ++i) {
    os << (i ? ", [" : " [");
    const auto& row = v.rows()[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << row[j];
    }
    os << ']';
  }
  os << ')';
  return os.str();
}

}  // namespace parastack
