#ifndef PARASTACK_TEST_SUPPORT_HPP
#define PARASTACK_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "parastack/core.hpp"

namespace parastack::testing {

inline WeightType random_weight_type(std::mt19937& rng, int max_points, int max_flag_len) {
  std::uniform_int_distribution<int> points(0, max_points);
  std::uniform_int_distribution<int> flag_len(1, max_flag_len);
  std::vector<int> lens(static_cast<std::size_t>(points(rng)));
  for (int& w : lens) w = flag_len(rng);
  return WeightType::of(std::move(lens));
}

inline DimVector random_vector(std::mt19937& rng, const WeightType& wt, std::int64_t min_rank,
                               std::int64_t max_rank) {
  std::uniform_int_distribution<std::int64_t> rank_dist(min_rank, max_rank);
  const std::int64_t rank = rank_dist(rng);
  std::uniform_int_distribution<std::int64_t> entry(0, rank);
  Rows rows;
  rows.reserve(static_cast<std::size_t>(wt.points()));
  for (int i = 0; i < wt.points(); ++i) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(wt.flag_len(i) - 1));
    for (std::int64_t& x : row) x = entry(rng);
    std::sort(row.begin(), row.end(), std::greater<>());
    rows.push_back(std::move(row));
  }
  return validate(rank, std::move(rows), wt);
}

}  // namespace parastack::testing

#endif
