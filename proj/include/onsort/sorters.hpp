#pragma once

#include <cstdint>
#include <vector>

#include "onsort/composite.hpp"
#include "onsort/elementary.hpp"
#include "onsort/evaluator.hpp"

namespace onsort {

// Growable series of identical elementary trees of height
//   H = floor(log2(eps * n) - log2(floor(log2 n))),
// all rooted at [0,1). An element is tried against the trees in order and a
// fresh tree is appended when all of them reject it, so insertion never
// fails. Trees are allocated lazily; with eps in [3*log2(n)/n, 1] the
// allocated cells stay below (1+eps)*n at all times.
class SmallSpaceSorter {
 public:
  SmallSpaceSorter(std::uint64_t capacity, double epsilon);

  // Phase-sized instances for the doubling wrapper: skips the epsilon range
  // check and clamps the height at 0 (degenerate one-cell trees degrade to
  // sequential writes, which stay within every space bound).
  static SmallSpaceSorter for_phase(std::uint64_t capacity, double epsilon);

  static double min_epsilon(std::uint64_t n);
  static int height_for(std::uint64_t n, double epsilon);

  std::uint64_t insert(double x);  // returns the global cell; never fails

  std::uint64_t capacity() const { return capacity_; }
  double epsilon() const { return epsilon_; }
  int tree_height() const { return height_; }
  std::uint64_t inserted() const { return inserted_; }
  std::uint64_t allocated_cells() const { return trees_.size() << height_; }
  std::uint64_t occupied_cells() const { return inserted_; }
  std::uint64_t unused_cells() const { return allocated_cells() - occupied_cells(); }

  std::size_t tree_count() const { return trees_.size(); }
  const ElementaryTree& tree(std::size_t i) const { return trees_[i]; }

  CellSnapshot snapshot() const;

 private:
  struct phase_tag {};
  SmallSpaceSorter(std::uint64_t capacity, double epsilon, phase_tag);

  std::uint64_t capacity_;
  double epsilon_;
  int height_ = 0;
  std::uint64_t inserted_ = 0;
  std::vector<ElementaryTree> trees_;
};

// A single tree ensemble of order alpha over [0,1): composite prefix of
// height H = log2(n/alpha) plus alpha elementary trees. Guaranteed to accept
// its first n elements. n is rounded up to a power of two and alpha down, so
// the reported space uses the rounded values while capacity() keeps the
// requested n.
class EnsembleSorter {
 public:
  EnsembleSorter(std::uint64_t capacity, std::uint64_t alpha);

  std::uint64_t insert(double x);  // throws std::logic_error if the ensemble rejects

  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t rounded_capacity() const { return rounded_; }
  std::uint64_t alpha() const { return ensemble_.order(); }
  std::uint64_t requested_alpha() const { return requested_alpha_; }
  int height() const { return ensemble_.height(); }
  std::uint64_t inserted() const { return inserted_; }
  std::uint64_t allocated_cells() const { return ensemble_.cell_count(); }
  std::uint64_t occupied_cells() const { return inserted_; }

  const TreeEnsemble& ensemble() const { return ensemble_; }

  CellSnapshot snapshot() const;

 private:
  std::uint64_t capacity_;
  std::uint64_t rounded_;
  std::uint64_t requested_alpha_;
  std::uint64_t inserted_ = 0;
  TreeEnsemble ensemble_;
};

// beta composite trees of height log2(n), the k-th rooted at the static label
// [(k-1)/beta, k/beta). Routing is by interval, so each element has exactly
// one candidate tree; the first n insertions always succeed.
class SegmentedSorter {
 public:
  SegmentedSorter(std::uint64_t capacity, std::uint64_t beta);

  std::uint64_t insert(double x);  // throws std::logic_error if the tree rejects

  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t rounded_capacity() const { return rounded_; }
  std::uint64_t beta() const { return trees_.size(); }
  std::uint64_t requested_beta() const { return requested_beta_; }
  int height() const { return trees_.front().height(); }
  std::uint64_t inserted() const { return inserted_; }
  std::uint64_t allocated_cells() const { return trees_.size() * trees_.front().cell_count(); }
  std::uint64_t occupied_cells() const { return inserted_; }

  std::size_t tree_count() const { return trees_.size(); }
  const CompositeTree& tree(std::size_t k) const { return trees_[k]; }
  std::size_t route(double x) const;

  CellSnapshot snapshot() const;

 private:
  std::uint64_t capacity_;
  std::uint64_t rounded_;
  std::uint64_t requested_beta_;
  std::uint64_t inserted_ = 0;
  std::vector<CompositeTree> trees_;
};

// Regime selection for a space budget of roughly gamma * n cells:
// gamma below log2(n) picks an ensemble with alpha ~ log2(n)/gamma, and
// gamma from log2(n) up picks the segmented array with beta ~ gamma/log2(n).
// Parameters are rounded down to powers of two.
enum class Regime { kEnsemble, kSegmented };

struct StructureChoice {
  Regime regime;
  std::uint64_t parameter;  // alpha or beta
};

StructureChoice select_structure(double gamma, std::uint64_t n);

}  // namespace onsort
