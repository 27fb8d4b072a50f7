#include "onsort/doubling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace onsort {

namespace {

int floor_log2(std::uint64_t n) {
  return std::bit_width(n) - 1;
}

}  // namespace

DoublingSorter::DoublingSorter(DoublingVariant variant, std::uint64_t capacity, double epsilon,
                               double gamma)
    : variant_(variant), capacity_(capacity), epsilon_(epsilon), gamma_(gamma) {
  if (capacity < 1) throw std::invalid_argument("doubling sorter needs capacity >= 1");
  if (variant == DoublingVariant::kSmallSpace) {
    if (!(epsilon >= SmallSpaceSorter::min_epsilon(std::max<std::uint64_t>(capacity, 2))) ||
        epsilon > 1.0)
      throw std::invalid_argument("doubling sorter: epsilon outside [3*log2(n)/n, 1]");
    const double eps3 = epsilon / 3.0;
    const double lg = std::log2(1.0 / eps3);
    warmup_target_ = static_cast<std::uint64_t>(std::ceil(lg * lg / eps3));
  } else {
    const double log_n = static_cast<double>(floor_log2(std::bit_ceil(std::max<std::uint64_t>(capacity, 2))));
    if (!(gamma >= 1.0) || gamma > log_n * log_n)
      throw std::invalid_argument("doubling sorter: gamma outside [1, log2(n)^2]");
  }
}

DoublingSorter DoublingSorter::small_space(std::uint64_t capacity, double epsilon) {
  return DoublingSorter(DoublingVariant::kSmallSpace, capacity, epsilon, 0.0);
}

DoublingSorter DoublingSorter::gamma_space(std::uint64_t capacity, double gamma) {
  return DoublingSorter(DoublingVariant::kGammaSpace, capacity, 0.0, gamma);
}

std::uint64_t DoublingSorter::engine_allocated() const {
  return std::visit([](const auto& e) { return e.allocated_cells(); }, engines_.back());
}

std::uint64_t DoublingSorter::engine_insert(double y) {
  return std::visit([&](auto& e) { return e.insert(y); }, engines_.back());
}

void DoublingSorter::seal_open_region() {
  if (epochs_.empty()) return;
  EpochInfo& ep = epochs_.back();
  if (!ep.phases.empty()) {
    ep.phases.back().allocated = engine_allocated();
    frontier_ = ep.phases.back().region_start + ep.phases.back().allocated;
  }
}

void DoublingSorter::open_epoch(double lo, double hi) {
  seal_open_region();
  engines_.clear();
  EpochInfo ep;
  ep.lo = lo;
  ep.hi = hi;
  ep.opt = hi - lo;
  ep.region_start = frontier_;
  ep.warmup_target = variant_ == DoublingVariant::kSmallSpace ? warmup_target_ : 0;
  epochs_.push_back(ep);
}

void DoublingSorter::open_phase() {
  seal_open_region();
  EpochInfo& ep = epochs_.back();
  PhaseInfo ph;
  ph.bound = std::uint64_t{1} << (ep.phases.size() + 1);  // 2, 4, 8, ...
  ph.region_start = frontier_;
  if (variant_ == DoublingVariant::kSmallSpace) {
    engines_.clear();
    engines_.push_back(SmallSpaceSorter::for_phase(ph.bound, epsilon_ / 3.0));
  } else {
    // select_structure at the phase budget, with gamma clamped into the
    // range that budget supports.
    const double log_n = static_cast<double>(floor_log2(ph.bound));
    const double g = std::clamp(gamma_, 1.0, log_n * log_n);
    engines_.clear();
    const StructureChoice choice = select_structure(g, ph.bound);
    if (choice.regime == Regime::kEnsemble) {
      engines_.push_back(EnsembleSorter(ph.bound, choice.parameter));
    } else {
      engines_.push_back(SegmentedSorter(ph.bound, choice.parameter));
    }
  }
  ph.allocated = engine_allocated();
  ep.phases.push_back(ph);
}

std::uint64_t DoublingSorter::insert(double x) {
  if (inserted_ == capacity_) throw std::invalid_argument("doubling sorter: capacity exceeded");
  if (!std::isfinite(x)) throw std::invalid_argument("doubling sorter: value not finite");

  // Bootstrap: write sequentially until two distinct values fix the guess.
  if (epochs_.empty()) {
    const std::uint64_t cell = frontier_++;
    ++bootstrap_count_;
    placements_.emplace_back(cell, x);
    seen_min_ = bootstrap_count_ == 1 ? x : std::min(seen_min_, x);
    seen_max_ = bootstrap_count_ == 1 ? x : std::max(seen_max_, x);
    ++inserted_;
    if (bootstrap_count_ >= 2 && seen_min_ < seen_max_) open_epoch(seen_min_, seen_max_);
    return cell;
  }

  if (x < epochs_.back().lo || x > epochs_.back().hi) {
    const EpochInfo& prev = epochs_.back();
    if (x > prev.hi) {
      open_epoch(prev.lo, std::max(x, 2.0 * prev.hi - prev.lo));
    } else {
      open_epoch(std::min(x, 2.0 * prev.lo - prev.hi), prev.hi);
    }
  }

  EpochInfo& ep = epochs_.back();
  ++ep.inserted;
  ++inserted_;

  if (ep.warmup_written < ep.warmup_target) {
    const std::uint64_t cell = frontier_++;
    ++ep.warmup_written;
    placements_.emplace_back(cell, x);
    return cell;
  }

  if (ep.phases.empty() || ep.phases.back().inserted == ep.phases.back().bound) open_phase();
  PhaseInfo& ph = epochs_.back().phases.back();
  const double y = preprocess((x - epochs_.back().lo) / epochs_.back().opt, ph.bound);
  const std::uint64_t cell = ph.region_start + engine_insert(y);
  ++ph.inserted;
  ph.allocated = engine_allocated();
  placements_.emplace_back(cell, x);
  return cell;
}

std::uint64_t DoublingSorter::allocated_cells() const {
  std::uint64_t total = bootstrap_count_;
  for (const auto& ep : epochs_) {
    total += ep.warmup_written;
    for (const auto& ph : ep.phases) total += ph.allocated;
  }
  return total;
}

CellSnapshot DoublingSorter::snapshot() const {
  CellSnapshot s;
  s.cell_count = allocated_cells();
  s.occupied = placements_;
  std::sort(s.occupied.begin(), s.occupied.end());
  return s;
}

DoublingMetrics DoublingSorter::metrics() const {
  DoublingMetrics m;
  const CostReport r = total_cost(snapshot(), /*sentinels=*/false);
  m.total_cost = r.total_cost;
  m.ratio_defined = r.ratio_defined;
  m.competitive_ratio = r.competitive_ratio;
  m.input_range = r.value_range;
  m.allocated = allocated_cells();
  m.occupied = inserted_;
  m.epoch_count = epochs_.size();
  for (const auto& ep : epochs_) m.max_phases_per_epoch = std::max(m.max_phases_per_epoch, ep.phases.size());
  return m;
}

}  // namespace onsort
