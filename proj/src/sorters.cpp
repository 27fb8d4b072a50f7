#include "onsort/sorters.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace onsort {

namespace {

int floor_log2(std::uint64_t n) {
  return std::bit_width(n) - 1;
}

std::uint64_t pow2_floor(double v) {
  if (!(v >= 1.0)) return 1;
  return std::bit_floor(static_cast<std::uint64_t>(v));
}

}  // namespace

double SmallSpaceSorter::min_epsilon(std::uint64_t n) {
  return 3.0 * std::log2(static_cast<double>(n)) / static_cast<double>(n);
}

int SmallSpaceSorter::height_for(std::uint64_t n, double epsilon) {
  const int log_n = floor_log2(n);
  return static_cast<int>(std::floor(std::log2(epsilon * static_cast<double>(n)) -
                                     std::log2(static_cast<double>(log_n))));
}

SmallSpaceSorter::SmallSpaceSorter(std::uint64_t capacity, double epsilon)
    : capacity_(capacity), epsilon_(epsilon) {
  if (capacity < 2) throw std::invalid_argument("small-space sorter needs capacity >= 2");
  const double lo = min_epsilon(capacity);
  if (!(epsilon >= lo))
    throw std::invalid_argument("epsilon " + std::to_string(epsilon) + " below minimum 3*log2(n)/n = " +
                                std::to_string(lo) + " for n = " + std::to_string(capacity));
  if (epsilon > 1.0)
    throw std::invalid_argument("epsilon " + std::to_string(epsilon) + " above maximum 1");
  height_ = height_for(capacity, epsilon);
  if (height_ < 0 || height_ > ElementaryTree::kMaxHeight)
    throw std::invalid_argument("small-space sorter: tree height out of range");
}

SmallSpaceSorter::SmallSpaceSorter(std::uint64_t capacity, double epsilon, phase_tag)
    : capacity_(capacity), epsilon_(epsilon) {
  if (capacity < 2) throw std::invalid_argument("small-space sorter needs capacity >= 2");
  if (!(epsilon > 0.0) || epsilon > 1.0) throw std::invalid_argument("epsilon outside (0, 1]");
  height_ = std::max(0, height_for(capacity, epsilon));
  if (height_ > ElementaryTree::kMaxHeight)
    throw std::invalid_argument("small-space sorter: tree height out of range");
}

SmallSpaceSorter SmallSpaceSorter::for_phase(std::uint64_t capacity, double epsilon) {
  return SmallSpaceSorter(capacity, epsilon, phase_tag{});
}

std::uint64_t SmallSpaceSorter::insert(double x) {
  if (inserted_ == capacity_) throw std::invalid_argument("small-space sorter: capacity exceeded");
  for (auto& tree : trees_) {
    if (auto cell = tree.insert(x)) {
      ++inserted_;
      return *cell;
    }
  }
  trees_.emplace_back(height_, DyadicInterval{}, trees_.size() << height_);
  auto cell = trees_.back().insert(x);
  if (!cell) throw std::logic_error("small-space sorter: fresh tree rejected an element");
  ++inserted_;
  return *cell;
}

CellSnapshot SmallSpaceSorter::snapshot() const {
  CellSnapshot s;
  s.cell_count = allocated_cells();
  s.occupied.reserve(inserted_);
  for (const auto& tree : trees_) {
    tree.for_each_occupied([&](std::uint64_t local, double v) {
      s.occupied.emplace_back(tree.base_offset() + local, v);
    });
  }
  return s;
}

EnsembleSorter::EnsembleSorter(std::uint64_t capacity, std::uint64_t alpha)
    : capacity_(capacity),
      rounded_(std::bit_ceil(std::max<std::uint64_t>(capacity, 2))),
      requested_alpha_(alpha),
      ensemble_(1, 0, DyadicInterval{}) {
  if (capacity < 1) throw std::invalid_argument("ensemble sorter needs capacity >= 1");
  if (alpha < 1) throw std::invalid_argument("ensemble sorter needs alpha >= 1");
  const int log_n = floor_log2(rounded_);
  const std::uint64_t alpha_cap = std::bit_floor(static_cast<std::uint64_t>(log_n));
  const std::uint64_t a = std::min(std::bit_floor(alpha), alpha_cap);
  const int height = log_n - floor_log2(a);
  ensemble_ = TreeEnsemble(height, a, DyadicInterval{});
}

std::uint64_t EnsembleSorter::insert(double x) {
  if (inserted_ == capacity_) throw std::invalid_argument("ensemble sorter: capacity exceeded");
  auto cell = ensemble_.insert(x);
  if (!cell) throw std::logic_error("ensemble sorter: insertion failed within capacity");
  ++inserted_;
  return *cell;
}

CellSnapshot EnsembleSorter::snapshot() const {
  CellSnapshot s;
  s.cell_count = allocated_cells();
  s.occupied.reserve(inserted_);
  ensemble_.for_each_occupied([&](std::uint64_t cell, double v) { s.occupied.emplace_back(cell, v); });
  return s;
}

SegmentedSorter::SegmentedSorter(std::uint64_t capacity, std::uint64_t beta)
    : capacity_(capacity),
      rounded_(std::bit_ceil(std::max<std::uint64_t>(capacity, 2))),
      requested_beta_(beta) {
  if (capacity < 1) throw std::invalid_argument("segmented sorter needs capacity >= 1");
  if (beta < 1) throw std::invalid_argument("segmented sorter needs beta >= 1");
  const int log_n = floor_log2(rounded_);
  const std::uint64_t beta_cap = std::bit_floor(static_cast<std::uint64_t>(log_n));
  const std::uint64_t b = std::min(std::bit_floor(beta), beta_cap);
  const int label_depth = floor_log2(b);
  const std::uint64_t tree_cells = CompositeTree::size_for_height(log_n);
  trees_.reserve(b);
  for (std::uint64_t k = 0; k < b; ++k) {
    trees_.emplace_back(log_n, DyadicInterval(label_depth, k), k * tree_cells);
  }
}

std::size_t SegmentedSorter::route(double x) const {
  const int label_depth = floor_log2(trees_.size());
  return static_cast<std::size_t>(std::ldexp(x, label_depth));
}

std::uint64_t SegmentedSorter::insert(double x) {
  if (inserted_ == capacity_) throw std::invalid_argument("segmented sorter: capacity exceeded");
  auto cell = trees_[route(x)].insert(x);
  if (!cell) throw std::logic_error("segmented sorter: insertion failed within capacity");
  ++inserted_;
  return *cell;
}

CellSnapshot SegmentedSorter::snapshot() const {
  CellSnapshot s;
  s.cell_count = allocated_cells();
  s.occupied.reserve(inserted_);
  for (const auto& tree : trees_) {
    tree.for_each_occupied([&](std::uint64_t cell, double v, std::uint64_t) { s.occupied.emplace_back(cell, v); });
  }
  return s;
}

StructureChoice select_structure(double gamma, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("select_structure needs n >= 2");
  const std::uint64_t rounded = std::bit_ceil(n);
  const double log_n = static_cast<double>(floor_log2(rounded));
  if (!(gamma >= 1.0) || gamma > log_n * log_n)
    throw std::invalid_argument("gamma " + std::to_string(gamma) + " outside [1, log2(n)^2 = " +
                                std::to_string(log_n * log_n) + "]");
  const std::uint64_t param_cap = std::bit_floor(static_cast<std::uint64_t>(log_n));
  if (gamma < log_n) {
    return {Regime::kEnsemble, std::min(pow2_floor(log_n / gamma), param_cap)};
  }
  return {Regime::kSegmented, std::min(pow2_floor(gamma / log_n), param_cap)};
}

}  // namespace onsort
