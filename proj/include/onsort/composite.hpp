#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "onsort/elementary.hpp"

namespace onsort {

// A binary tree of elementary trees, stored in order. The node at height h'
// (leaves at height 1, root at height h) is an elementary tree of height h'
// whose root label is the node's static label: children split their parent's
// label into its left and right halves. The cell layout is the in-order
// flattening (left subtree, own array, right subtree), so a composite tree of
// height h occupies h * 2^h cells.
//
// Composite nodes are heap-indexed separately from elementary-tree nodes:
// cnode 0 is the root, cnode c has children 2c+1 and 2c+2.
class CompositeTree {
 public:
  CompositeTree(int height, DyadicInterval root_label, std::uint64_t base_offset = 0);

  CompositeTree(const CompositeTree& other) { *this = other; }
  CompositeTree& operator=(const CompositeTree& other);
  CompositeTree(CompositeTree&&) = default;
  CompositeTree& operator=(CompositeTree&&) = default;

  // h * 2^h, equivalently the recurrence s(h) = 2 s(h-1) + 2^h with s(1) = 2.
  static std::uint64_t size_for_height(int h);

  // Locates the unique admissible leaf and escalates along the leaf-to-root
  // path, inserting into the first elementary tree that accepts x.
  std::optional<std::uint64_t> insert(double x);

  int height() const { return height_; }
  const DyadicInterval& root_label() const { return root_label_; }
  std::uint64_t base_offset() const { return base_offset_; }
  std::uint64_t cell_count() const { return size_for_height(height_); }
  std::uint64_t size() const { return size_; }

  std::uint64_t node_count() const { return (std::uint64_t{1} << height_) - 1; }
  int node_height(std::uint64_t cnode) const;
  DyadicInterval node_label(std::uint64_t cnode) const;
  std::uint64_t node_offset(std::uint64_t cnode) const { return offsets_[cnode]; }
  // nullptr until the node's elementary tree has been touched.
  const ElementaryTree* node_tree(std::uint64_t cnode) const { return trees_[cnode].get(); }

  // The admissible leaf for x, via integer arithmetic on floor(x * 2^(h-1)).
  std::uint64_t leaf_node_for(double x) const;
  // Same leaf, found by descending with label comparisons (cross-check path).
  std::uint64_t leaf_node_by_descent(double x) const;

  // cnode owning a composite-local cell.
  std::uint64_t cell_owner(std::uint64_t local_cell) const;

  // Visits (global_cell, value, cnode) in ascending cell order.
  template <typename Fn>
  void for_each_occupied(Fn&& fn) const {
    for (std::uint64_t cnode : inorder_) {
      const ElementaryTree* t = trees_[cnode].get();
      if (t == nullptr || t->size() == 0) continue;
      t->for_each_occupied([&](std::uint64_t local, double v) { fn(t->base_offset() + local, v, cnode); });
    }
  }

 private:
  ElementaryTree& ensure_tree(std::uint64_t cnode);
  static int depth_of(std::uint64_t cnode);

  int height_ = 1;
  DyadicInterval root_label_;
  std::uint64_t base_offset_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> offsets_;  // per cnode, composite-local
  std::vector<std::uint64_t> inorder_;  // cnodes in ascending offset order
  std::vector<std::unique_ptr<ElementaryTree>> trees_;
};

// One composite tree followed by alpha elementary trees of the same height,
// all sharing one root label. Insertion tries the composite prefix first,
// then the suffix trees in order.
class TreeEnsemble {
 public:
  enum class CostType { kType1, kType2, kType3 };

  TreeEnsemble(int height, std::uint64_t alpha, DyadicInterval root_label, std::uint64_t base_offset = 0);

  TreeEnsemble(const TreeEnsemble& other) : prefix_(other.prefix_) { copy_suffix(other); }
  TreeEnsemble& operator=(const TreeEnsemble& other);
  TreeEnsemble(TreeEnsemble&&) = default;
  TreeEnsemble& operator=(TreeEnsemble&&) = default;

  std::optional<std::uint64_t> insert(double x);

  int height() const { return prefix_.height(); }
  std::uint64_t order() const { return suffix_.size(); }
  const DyadicInterval& root_label() const { return prefix_.root_label(); }
  std::uint64_t base_offset() const { return prefix_.base_offset(); }
  std::uint64_t size() const { return size_; }
  std::uint64_t prefix_cell_count() const { return prefix_.cell_count(); }
  std::uint64_t suffix_tree_cells() const { return std::uint64_t{1} << height(); }
  std::uint64_t cell_count() const { return prefix_cell_count() + order() * suffix_tree_cells(); }

  const CompositeTree& prefix() const { return prefix_; }
  // nullptr until touched.
  const ElementaryTree* suffix_tree(std::uint64_t i) const { return suffix_[i].get(); }

  // Classification of the cost between two occupied cells (ensemble-local):
  // Type1 within one elementary tree, Type2 between different nodes of the
  // composite prefix, Type3 otherwise (prefix-to-suffix or suffix-to-suffix).
  CostType classify_adjacent(std::uint64_t cell_i, std::uint64_t cell_j) const;

  template <typename Fn>
  void for_each_occupied(Fn&& fn) const {
    prefix_.for_each_occupied([&](std::uint64_t cell, double v, std::uint64_t) { fn(cell, v); });
    for (const auto& t : suffix_) {
      if (t == nullptr) continue;
      t->for_each_occupied([&](std::uint64_t local, double v) { fn(t->base_offset() + local, v); });
    }
  }

 private:
  void copy_suffix(const TreeEnsemble& other);
  // (kind, id): kind 0 = prefix node (id = cnode), kind 1 = suffix (id = i).
  std::pair<int, std::uint64_t> unit_of(std::uint64_t cell) const;

  CompositeTree prefix_;
  std::vector<std::unique_ptr<ElementaryTree>> suffix_;
  std::uint64_t size_ = 0;
};

}  // namespace onsort
