#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace onsort {

// Occupied cells of one global array, in ascending cell order, plus the
// number of allocated cells. All cost and space measurement runs over
// snapshots so no structure is trusted to report its own objective.
struct CellSnapshot {
  std::uint64_t cell_count = 0;
  std::vector<std::pair<std::uint64_t, double>> occupied;
};

struct TreeCostEntry {
  std::string name;
  std::uint64_t first_cell = 0;
  std::uint64_t cells = 0;
  std::uint64_t occupied = 0;
  double cost = 0.0;
};

struct TypeBreakdown {
  double type1 = 0.0;  // within one elementary tree
  double type2 = 0.0;  // between different nodes of a composite prefix
  double type3 = 0.0;  // prefix-to-suffix and suffix-to-suffix
  double cross_tree = 0.0;  // between top-level trees (no per-pair lemma)
};

struct CostReport {
  double total_cost = 0.0;
  std::uint64_t pair_count = 0;
  std::uint64_t space_allocated = 0;
  std::uint64_t space_occupied = 0;
  std::uint64_t space_unused = 0;
  double value_range = 0.0;        // max - min of occupied values
  bool ratio_defined = false;      // false when the optimum is zero
  double competitive_ratio = 0.0;  // cost / optimum
  std::vector<TreeCostEntry> per_tree;
  std::optional<TypeBreakdown> types;
};

// Input pre-processing for the half-open engine: values arrive in [0, 1] and
// an exact 1 becomes 1 - 1/n. Throws std::invalid_argument outside [0, 1].
double preprocess(double x, std::uint64_t n);

// The objective over consecutive occupied cells. With sentinels, fixed values
// 0 and 1 flank the array (the known-range convention, optimum 1); without,
// only occupied cells are summed and the ratio is cost / (max - min).
CostReport total_cost(const CellSnapshot& cells, bool sentinels);

}  // namespace onsort
