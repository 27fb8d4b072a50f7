#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "onsort/evaluator.hpp"
#include "onsort/sorters.hpp"

namespace onsort {

enum class DoublingVariant { kSmallSpace, kGammaSpace };

struct PhaseInfo {
  std::uint64_t bound = 0;  // element budget 2^j
  std::uint64_t inserted = 0;
  std::uint64_t region_start = 0;
  std::uint64_t allocated = 0;
};

struct EpochInfo {
  double lo = 0.0;
  double hi = 0.0;
  double opt = 0.0;  // hi - lo, the current guess for the optimum
  std::uint64_t region_start = 0;
  std::uint64_t warmup_target = 0;
  std::uint64_t warmup_written = 0;
  std::uint64_t inserted = 0;
  std::vector<PhaseInfo> phases;
};

struct DoublingMetrics {
  double total_cost = 0.0;
  bool ratio_defined = false;
  double competitive_ratio = 0.0;
  double input_range = 0.0;
  std::uint64_t allocated = 0;
  std::uint64_t occupied = 0;
  std::size_t epoch_count = 0;
  std::size_t max_phases_per_epoch = 0;
};

// Unknown-range wrapper: nested guess-and-double over the optimum (epochs)
// and over the element count (phases). The first two distinct elements seed
// the range guess; an element outside the current [lo, hi] at least doubles
// it and opens a fresh region immediately after the last space used. Within
// an epoch, elements are rescaled to [0,1), pre-processed, and fed to a fresh
// fixed-range sorter per phase, with phase budgets 2, 4, 8, ...
//
// The small-space variant writes ceil(log2^2(1/eps') / eps') elements of each
// epoch sequentially before phase 1 (eps' = eps/3) and uses phase sorters
// with eps'. The gamma variant picks each phase's structure via
// select_structure at the phase budget. Regions are never reclaimed.
class DoublingSorter {
 public:
  static DoublingSorter small_space(std::uint64_t capacity, double epsilon);
  static DoublingSorter gamma_space(std::uint64_t capacity, double gamma);

  std::uint64_t insert(double x);  // raw value, any finite double

  DoublingVariant variant() const { return variant_; }
  std::uint64_t capacity() const { return capacity_; }
  double epsilon() const { return epsilon_; }
  double gamma() const { return gamma_; }
  std::uint64_t inserted() const { return inserted_; }
  std::uint64_t allocated_cells() const;
  std::uint64_t occupied_cells() const { return inserted_; }

  std::uint64_t bootstrap_cells() const { return bootstrap_count_; }
  const std::vector<EpochInfo>& epochs() const { return epochs_; }

  // Raw input values at their global cells.
  CellSnapshot snapshot() const;
  DoublingMetrics metrics() const;

 private:
  using PhaseEngine = std::variant<SmallSpaceSorter, EnsembleSorter, SegmentedSorter>;

  DoublingSorter(DoublingVariant variant, std::uint64_t capacity, double epsilon, double gamma);

  void open_epoch(double lo, double hi);
  void open_phase();
  std::uint64_t engine_allocated() const;
  std::uint64_t engine_insert(double y);
  void seal_open_region();

  DoublingVariant variant_;
  std::uint64_t capacity_;
  double epsilon_ = 0.0;  // small-space variant
  double gamma_ = 0.0;    // gamma variant
  std::uint64_t warmup_target_ = 0;

  std::uint64_t inserted_ = 0;
  std::uint64_t bootstrap_count_ = 0;
  double seen_min_ = 0.0, seen_max_ = 0.0;

  std::uint64_t frontier_ = 0;  // next unallocated global cell
  std::vector<EpochInfo> epochs_;
  std::vector<PhaseEngine> engines_;  // one per phase of the open epoch

  std::vector<std::pair<std::uint64_t, double>> placements_;  // (cell, raw)
};

}  // namespace onsort
