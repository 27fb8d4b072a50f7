#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "onsort/dyadic.hpp"

namespace onsort {

enum class NodeState { kEmpty, kPartial, kFull };

// A 2^h-cell array slice with a virtual complete binary tree over it.
// Nodes are heap-indexed (node i has children 2i+1 and 2i+2); the last 2^h
// nodes are the leaves, left to right, and leaf i owns cell i. Non-root nodes
// acquire dyadic labels as elements arrive: a child's label is always the
// left or right half of its parent's label, and either child may take either
// half. Insertion is the label-guided in-order descent; it succeeds at a leaf
// cell or fails leaving the tree untouched.
//
// Storage is materialized on the first insertion so untouched trees cost a
// few words. Per-node free-leaf counters let the descent skip full subtrees
// in O(1); a full subtree always fails, so the observable behaviour is
// identical to the plain recursion.
class ElementaryTree {
 public:
  static constexpr int kMaxHeight = 30;

  ElementaryTree(int height, DyadicInterval root_label, std::uint64_t base_offset = 0);

  // Inserts x; returns the global cell index on success. Throws if x is not
  // admissible at the root (a caller error, distinct from ordinary failure).
  std::optional<std::uint64_t> insert(double x);

  int height() const { return height_; }
  const DyadicInterval& root_label() const { return root_label_; }
  std::uint64_t base_offset() const { return base_offset_; }
  std::uint64_t cell_count() const { return std::uint64_t{1} << height_; }
  std::uint64_t node_count() const { return (std::uint64_t{2} << height_) - 1; }
  std::uint64_t size() const { return size_; }
  bool full() const { return size_ == cell_count(); }

  bool is_leaf_node(std::uint64_t node) const { return node + 1 >= cell_count(); }
  std::uint64_t leaf_node_of_cell(std::uint64_t cell) const { return cell + cell_count() - 1; }

  // The root is always marked (with the root label).
  bool is_marked(std::uint64_t node) const;
  DyadicInterval label(std::uint64_t node) const;  // pre: is_marked(node)

  std::optional<double> cell(std::uint64_t i) const;

  // full / partial / empty per node. A node is empty iff unmarked, except the
  // root, which counts as empty while the tree holds no element. A non-leaf
  // is full iff neither child is empty, partial iff exactly one child is
  // empty; a leaf is full iff occupied.
  NodeState classify(std::uint64_t node) const;
  bool is_empty_node(std::uint64_t node) const;

  // Sum of |x_i - x_{i+1}| over consecutive occupied cells of this tree.
  double cost() const;

  // Visits (local_cell, value) for occupied cells in ascending cell order.
  template <typename Fn>
  void for_each_occupied(Fn&& fn) const {
    for (std::uint64_t i = 0; i < cells_.size(); ++i) {
      if (!std::isnan(cells_[i])) fn(i, cells_[i]);
    }
  }

 private:
  void materialize();
  bool materialized() const { return !label_depth_.empty(); }

  int height_;
  DyadicInterval root_label_;
  std::uint64_t base_offset_;
  std::uint64_t size_ = 0;
  std::vector<std::int8_t> label_depth_;    // -1 = unmarked
  std::vector<std::uint64_t> label_index_;
  std::vector<std::uint32_t> free_;         // empty leaves under each node
  std::vector<double> cells_;               // NaN = empty
};

}  // namespace onsort
