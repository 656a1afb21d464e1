#ifndef PARASTACK_SCAN_HPP
#define PARASTACK_SCAN_HPP

#include <string>
#include <vector>

#include "parastack/core.hpp"
#include "parastack/goodness.hpp"

namespace parastack {

/// Bounds of an instance grid: every weight type with up to max_points
/// points and flag lengths in [1, max_flag_len], filled with every valid
/// dimension vector of rank in [1, max_rank].
struct GridBounds {
  std::int64_t max_rank = 1;
  int max_points = 0;
  int max_flag_len = 1;
};

/// All weight types within the bounds, ordered by point count then by
/// flag lengths lexicographically.
std::vector<WeightType> grid_weight_types(int max_points, int max_flag_len);

/// All valid fillings of one weight type, ordered by rank then by rows
/// lexicographically.
std::vector<DimVector> grid_vectors(const WeightType& wt, std::int64_t max_rank);

/// The full vector grid, concatenated in canonical order.
std::vector<DimVector> grid_all_vectors(const GridBounds& bounds);

struct ScanRow {
  int genus = 0;
  DimVector alpha;
  Verdict verdict;

  bool operator==(const ScanRow&) const = default;
};

/// Classifies every (genus, instance) pair in canonical order: genus
/// ascending (deduplicated), then weight type, then vector. Throws
/// InvalidBounds on an empty or negative genus list or absurd bounds.
/// The serial engine is the reference; the parallel engine must produce
/// an identical row vector.
std::vector<ScanRow> run_scan_serial(const GridBounds& bounds, std::vector<int> genus_list);
std::vector<ScanRow> run_scan_parallel(const GridBounds& bounds, std::vector<int> genus_list);

/// Marked points whose stored flag row has an entry strictly between 0
/// and the rank; only those impose a condition through the Euler form.
int nontrivial_flag_points(const DimVector& a);

/// Violations of the theorem-level expectations on scan rows: every
/// genus >= 2 row must be almost very good; at genus 1, one nontrivial
/// flag point forces at least almost good and two force almost very
/// good. Empty means the assertion holds.
std::vector<std::string> remark38_violations(const std::vector<ScanRow>& rows);

}  // namespace parastack

#endif
