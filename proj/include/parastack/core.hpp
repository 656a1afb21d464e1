#ifndef PARASTACK_CORE_HPP
#define PARASTACK_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parastack {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };
struct WeightTypeMismatch : Error { using Error::Error; };
struct ZeroRank : Error { using Error::Error; };
struct InvalidBounds : Error { using Error::Error; };
struct GenusTooLow : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// Exact signed 64-bit arithmetic. Verdicts hinge on exact sign
// comparisons, so wraparound raises OverflowError instead of silently
// producing a wrong answer.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

using Rows = std::vector<std::vector<std::int64_t>>;

/// Flag lengths w_i at the k marked points of a curve. A point with
/// w_i = 1 has an empty flag row and contributes nothing to any form.
class WeightType {
 public:
  WeightType() = default;

  /// Throws DomainError unless every flag length is >= 1.
  static WeightType of(std::vector<int> flag_lens);

  int points() const { return static_cast<int>(flag_lens_.size()); }
  int flag_len(int i) const { return flag_lens_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& flag_lens() const { return flag_lens_; }

  bool operator==(const WeightType&) const = default;

 private:
  std::vector<int> flag_lens_;
};

class DimVector;

/// Checks shape against wt, then monotonicity. Throws ShapeMismatch when
/// the row count or a row length is wrong, NotMonotone when some entry
/// exceeds its predecessor (or the rank), is negative, or the rank is.
DimVector validate(std::int64_t rank, Rows rows, const WeightType& wt);

/// Shape-inferred variant: the weight type is read off the row lengths.
DimVector validate(std::int64_t rank, Rows rows);

/// Rank together with the stored flag dimensions
///   rank >= a_{i1} >= ... >= a_{i,w_i-1} >= 0
/// at each marked point. The boundary values a_{i0} = rank and
/// a_{i,w_i} = 0 are materialized by entry() and never stored.
/// Instances are valid by construction: build them through validate().
class DimVector {
 public:
  DimVector() = default;  // the rank-0 vector with no points

  std::int64_t rank() const { return rank_; }
  const Rows& rows() const { return rows_; }
  int points() const { return static_cast<int>(rows_.size()); }
  int flag_len(int i) const {
    return static_cast<int>(rows_[static_cast<std::size_t>(i)].size()) + 1;
  }

  /// a_{ij} with the boundary conventions, valid for 0 <= j <= w_i.
  std::int64_t entry(int i, int j) const;

  WeightType weight_type() const;
  bool same_shape(const DimVector& o) const;

  // Canonical order: rank first, then flattened rows lexicographically.
  auto operator<=>(const DimVector&) const = default;

 private:
  DimVector(std::int64_t rank, Rows rows)
      : rank_(rank), rows_(std::move(rows)) {}
  friend DimVector validate(std::int64_t, Rows);

  std::int64_t rank_ = 0;
  Rows rows_;
};

/// Componentwise sum; the result of adding two valid vectors is valid.
DimVector add(const DimVector& a, const DimVector& b);

/// Componentwise difference a - b, or nullopt when the result is not a
/// valid dimension vector.
std::optional<DimVector> try_sub(const DimVector& a, const DimVector& b);

/// A dimension vector together with the degree of the underlying bundle.
struct SheafDatum {
  DimVector dimvec;
  std::int64_t degree = 0;
};

/// The Euler form
///   <a, b> = a_0 b_0 + sum_{i, 0<=j<w_i} (b_{i,j+1} - b_{ij}) a_{i,j+1}.
/// Bilinear; throws WeightTypeMismatch unless the shapes agree.
std::int64_t euler_form(const DimVector& a, const DimVector& b);

/// q(a) = <a, a> and p(a) = 1 - q(a).
std::int64_t q(const DimVector& a);
std::int64_t p(const DimVector& a);

/// Symmetrization <a, b> + <b, a>.
std::int64_t sym_form(const DimVector& a, const DimVector& b);

/// Euler characteristic of the sheaf of parabolic morphisms F -> E on a
/// genus-g curve, with F carrying f.dimvec (= b) and E carrying e.dimvec
/// (= a):  b_0 deg E - a_0 deg F - g a_0 b_0 + <b, a>.
std::int64_t chi_hom(const SheafDatum& f, const SheafDatum& e, int genus);

std::string to_string(const WeightType& wt);
std::string to_string(const DimVector& v);  // e.g. "(3; [2,1], [])"

}  // namespace parastack

#endif
