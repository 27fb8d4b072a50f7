#include "onsort/evaluator.hpp"

#include <cmath>
#include <stdexcept>

namespace onsort {

double preprocess(double x, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("preprocess: zero capacity");
  if (!(x >= 0.0) || x > 1.0) throw std::invalid_argument("preprocess: value outside [0, 1]");
  if (x < 1.0) return x;
  return 1.0 - 1.0 / static_cast<double>(n);
}

CostReport total_cost(const CellSnapshot& cells, bool sentinels) {
  CostReport r;
  r.space_allocated = cells.cell_count;
  r.space_occupied = cells.occupied.size();
  r.space_unused = r.space_allocated - r.space_occupied;

  double cost = 0.0;
  std::uint64_t pairs = 0;
  double prev = 0.0;
  bool have_prev = sentinels;  // leading sentinel value 0
  double lo = 0.0, hi = 0.0;
  bool have_value = false;
  std::uint64_t prev_cell = 0;
  for (const auto& [cell, v] : cells.occupied) {
    if (have_value && cell <= prev_cell) throw std::invalid_argument("total_cost: cells not ascending");
    prev_cell = cell;
    if (have_prev) {
      cost += std::abs(v - prev);
      ++pairs;
    }
    prev = v;
    have_prev = true;
    lo = have_value ? std::min(lo, v) : v;
    hi = have_value ? std::max(hi, v) : v;
    have_value = true;
  }
  if (sentinels) {
    cost += std::abs(1.0 - prev);  // prev is 0 when the array is empty
    ++pairs;
  }
  r.total_cost = cost;
  r.pair_count = pairs;
  r.value_range = have_value ? hi - lo : 0.0;
  if (sentinels) {
    r.ratio_defined = true;  // the sentinels pin the optimum at 1
    r.competitive_ratio = cost;
  } else if (have_value && hi > lo) {
    r.ratio_defined = true;
    r.competitive_ratio = cost / (hi - lo);
  }
  return r;
}

}  // namespace onsort
