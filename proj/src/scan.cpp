#include "parastack/scan.hpp"

#include <algorithm>
#include <exception>

namespace parastack {

namespace {

void extend_weight_types(std::vector<int>& lens, int remaining, int max_flag_len,
                         std::vector<WeightType>& out) {
  if (remaining == 0) {
    out.push_back(WeightType::of(lens));
    return;
  }
  for (int w = 1; w <= max_flag_len; ++w) {
    lens.push_back(w);
    extend_weight_types(lens, remaining - 1, max_flag_len, out);
    lens.pop_back();
  }
}

// Monotone fillings of one row, ascending lexicographically.
void ascending_rows(std::int64_t rank, int len, std::size_t pos,
                    std::vector<std::int64_t>& x,
                    std::vector<std::vector<std::int64_t>>& out) {
  if (pos == static_cast<std::size_t>(len)) {
    out.push_back(x);
    return;
  }
  const std::int64_t hi = pos == 0 ? rank : x[pos - 1];
  for (std::int64_t v = 0; v <= hi; ++v) {
    x[pos] = v;
    ascending_rows(rank, len, pos + 1, x, out);
  }
}

}  // namespace

std::vector<WeightType> grid_weight_types(int max_points, int max_flag_len) {
  if (max_points < 0) throw InvalidBounds("max_points must be nonnegative");
  if (max_flag_len < 1) throw InvalidBounds("max_flag_len must be at least 1");
  std::vector<WeightType> out;
  std::vector<int> lens;
  for (int k = 0; k <= max_points; ++k) extend_weight_types(lens, k, max_flag_len, out);
  return out;
}

std::vector<DimVector> grid_vectors(const WeightType& wt, std::int64_t max_rank) {
  if (max_rank < 1) throw InvalidBounds("max_rank must be at least 1");
  std::vector<DimVector> out;
  for (std::int64_t rank = 1; rank <= max_rank; ++rank) {
    std::vector<std::vector<std::vector<std::int64_t>>> options(
        static_cast<std::size_t>(wt.points()));
    for (int i = 0; i < wt.points(); ++i) {
      std::vector<std::int64_t> x(static_cast<std::size_t>(wt.flag_len(i) - 1));
      ascending_rows(rank, wt.flag_len(i) - 1, 0, x, options[static_cast<std::size_t>(i)]);
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(wt.points()), 0);
    while (true) {
      Rows rows;
      rows.reserve(static_cast<std::size_t>(wt.points()));
      for (int i = 0; i < wt.points(); ++i) {
        rows.push_back(options[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
      }
      out.push_back(validate(rank, std::move(rows), wt));
      int i = wt.points() - 1;
      while (i >= 0 && ++idx[static_cast<std::size_t>(i)] ==
                           options[static_cast<std::size_t>(i)].size()) {
        idx[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

std::vector<DimVector> grid_all_vectors(const GridBounds& bounds) {
  std::vector<DimVector> out;
  for (const WeightType& wt : grid_weight_types(bounds.max_points, bounds.max_flag_len)) {
    auto vecs = grid_vectors(wt, bounds.max_rank);
    out.insert(out.end(), std::make_move_iterator(vecs.begin()),
               std::make_move_iterator(vecs.end()));
  }
  return out;
}

namespace {

std::vector<ScanRow> scan_instances(const GridBounds& bounds, std::vector<int> genus_list) {
  if (genus_list.empty()) throw InvalidBounds("genus list must not be empty");
  for (int g : genus_list) {
    if (g < 0) throw InvalidBounds("genus must be nonnegative");
  }
  std::sort(genus_list.begin(), genus_list.end());
  genus_list.erase(std::unique(genus_list.begin(), genus_list.end()), genus_list.end());

  const std::vector<DimVector> vectors = grid_all_vectors(bounds);
  std::vector<ScanRow> rows;
  rows.reserve(genus_list.size() * vectors.size());
  for (int g : genus_list) {
    for (const DimVector& v : vectors) rows.push_back(ScanRow{g, v, Verdict{}});
  }
  return rows;
}

}  // namespace

std::vector<ScanRow> run_scan_serial(const GridBounds& bounds, std::vector<int> genus_list) {
  std::vector<ScanRow> rows = scan_instances(bounds, std::move(genus_list));
  for (ScanRow& row : rows) row.verdict = decide(row.alpha, row.genus);
  return rows;
}

std::vector<ScanRow> run_scan_parallel(const GridBounds& bounds, std::vector<int> genus_list) {
  std::vector<ScanRow> rows = scan_instances(bounds, std::move(genus_list));
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows.size());
  std::exception_ptr error = nullptr;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)].verdict =
          decide(rows[static_cast<std::size_t>(i)].alpha, rows[static_cast<std::size_t>(i)].genus);
    } catch (...) {
#pragma omp critical(parastack_scan_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

int nontrivial_flag_points(const DimVector& a) {
  int count = 0;
  for (const auto& row : a.rows()) {
    for (std::int64_t x : row) {
      if (x > 0 && x < a.rank()) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<std::string> remark38_violations(const std::vector<ScanRow>& rows) {
  std::vector<std::string> violations;
  for (const ScanRow& row : rows) {
    const Classification cls = row.verdict.classification;
    if (row.genus >= 2 && cls != Classification::AlmostVeryGood) {
      violations.push_back("genus " + std::to_string(row.genus) + " instance " +
                           to_string(row.alpha) + " is " +
                           std::string(classification_name(cls)));
      continue;
    }
    if (row.genus == 1) {
      const int nontrivial = nontrivial_flag_points(row.alpha);
      if (nontrivial >= 1 && cls == Classification::NotAlmostGood) {
        violations.push_back("genus 1 instance " + to_string(row.alpha) +
                             " with a nontrivial flag point is not-almost-good");
      } else if (nontrivial >= 2 && cls != Classification::AlmostVeryGood) {
        violations.push_back("genus 1 instance " + to_string(row.alpha) +
                             " with two nontrivial flag points is " +
                             std::string(classification_name(cls)));
      }
    }
  }
  return violations;
}

}  // namespace parastack
