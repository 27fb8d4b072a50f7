#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onsort/composite.hpp"
#include "onsort/doubling.hpp"
#include "onsort/dyadic.hpp"
#include "onsort/elementary.hpp"
#include "onsort/evaluator.hpp"
#include "onsort/sorters.hpp"

// Brute-force verifiers for the properties the structures claim. The checks
// run on plain snapshots (views) plus the insertion log and re-derive
// containment, offsets, and node classification on their own, so they share
// no code path with the structures they audit. Tests corrupt views directly
// to prove each check can fire.
namespace onsort::oracle {

struct TreeView {
  int height = 0;
  DyadicInterval root_label;
  std::uint64_t base_offset = 0;
  std::uint64_t elements = 0;
  // Empty vectors mean an untouched tree. labels[0] is the root label.
  std::vector<std::optional<DyadicInterval>> labels;
  std::vector<std::optional<double>> cells;
};

TreeView view_of(const ElementaryTree& tree);

struct EnsembleView {
  int height = 0;
  DyadicInterval root_label;
  // Composite prefix nodes by cnode heap index (views carry static labels
  // even when untouched), then the alpha suffix trees.
  std::vector<TreeView> prefix_nodes;
  std::vector<TreeView> suffix;
};

EnsembleView view_of(const TreeEnsemble& ensemble);
EnsembleView view_of(const CompositeTree& tree);  // ensemble of order 0

struct SorterView {
  int height = 0;
  std::vector<TreeView> trees;
};

SorterView view_of(const SmallSpaceSorter& sorter);

// Space lemma: wherever r+1 elementary-tree nodes at height h >= 1 carry the
// same label I, at least r * 2^h + 1 inserted elements lie in I. Roots count
// once their tree holds an element.
struct SpaceViolation {
  DyadicInterval label;
  int height = 0;
  std::uint64_t labeled_nodes = 0;
  std::uint64_t elements_in_label = 0;
  std::uint64_t required = 0;
};

std::vector<SpaceViolation> check_space_lemma(const EnsembleView& ens, std::span<const double> inserted);

// Partial-node disjointness: at each height below the root, the labels of all
// partial nodes across the sorter's trees are pairwise disjoint.
struct DisjointViolation {
  DyadicInterval label;
  int height = 0;
  std::size_t tree_a = 0, tree_b = 0;
};

std::vector<DisjointViolation> check_partial_disjoint(const SorterView& sorter);

std::size_t count_partial_roots(const SorterView& sorter);

// Ancestor admissibility: every occupied leaf's value lies in the label of
// each of its ancestors.
struct AdmissibilityViolation {
  std::uint64_t leaf_cell = 0;
  std::uint64_t ancestor_node = 0;
  double value = 0.0;
};

std::vector<AdmissibilityViolation> check_ancestor_admissibility(const TreeView& tree);

// Cost decomposition bounds for an ensemble holding n elements with root
// label length l and height H: Type1 <= n*H*(l/2^H),
// Type2 <= 9*n*H*(l/2^H) + l, Type3 <= alpha*l.
struct CostLemmaReport {
  double type1 = 0.0, type2 = 0.0, type3 = 0.0;
  double bound1 = 0.0, bound2 = 0.0, bound3 = 0.0;
  bool ok() const { return type1 <= bound1 && type2 <= bound2 && type3 <= bound3; }
};

CostLemmaReport check_cost_lemma(const EnsembleView& ens, std::uint64_t n_inserted);

// Independent second implementation of the objective; must match
// onsort::total_cost bit-exactly.
double naive_cost(const CellSnapshot& cells, bool sentinels);
double naive_cost_dense(const std::vector<std::optional<double>>& cells, bool sentinels);

// Exhaustive desk-scale scans: every sequence of length <= max_len over the
// grid {0, 1/d, ..., (d-1)/d}, checking after every prefix.
struct ExhaustiveStats {
  std::uint64_t sequences = 0;
  std::uint64_t violations = 0;
};

ExhaustiveStats exhaustive_space_lemma_scan(int height, std::uint64_t alpha, int grid_denominator,
                                            int max_len);
ExhaustiveStats exhaustive_partial_disjoint_scan(std::uint64_t capacity, double epsilon,
                                                 int grid_denominator, int max_len);

}  // namespace onsort::oracle
