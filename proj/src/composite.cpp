#include "onsort/composite.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace onsort {

CompositeTree::CompositeTree(int height, DyadicInterval root_label, std::uint64_t base_offset)
    : height_(height), root_label_(root_label), base_offset_(base_offset) {
  if (height < 1 || height > ElementaryTree::kMaxHeight)
    throw std::invalid_argument("composite tree height out of range");
  if (root_label.depth() + 2 * height > DyadicInterval::kMaxDepth)
    throw std::invalid_argument("composite tree would exceed the dyadic depth limit");
  offsets_.resize(node_count());
  inorder_.reserve(node_count());
  trees_.resize(node_count());
  const auto fill = [&](auto&& self, std::uint64_t cnode, std::uint64_t base) -> void {
    const int h = node_height(cnode);
    if (h == 1) {
      offsets_[cnode] = base;
      inorder_.push_back(cnode);
      return;
    }
    const std::uint64_t left_cells = size_for_height(h - 1);
    self(self, 2 * cnode + 1, base);
    offsets_[cnode] = base + left_cells;
    inorder_.push_back(cnode);
    self(self, 2 * cnode + 2, base + left_cells + (std::uint64_t{1} << h));
  };
  fill(fill, 0, 0);
}

CompositeTree& CompositeTree::operator=(const CompositeTree& other) {
  if (this == &other) return *this;
  height_ = other.height_;
  root_label_ = other.root_label_;
  base_offset_ = other.base_offset_;
  size_ = other.size_;
  offsets_ = other.offsets_;
  inorder_ = other.inorder_;
  trees_.resize(other.trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (other.trees_[i]) {
      if (trees_[i])
        *trees_[i] = *other.trees_[i];
      else
        trees_[i] = std::make_unique<ElementaryTree>(*other.trees_[i]);
    } else {
      trees_[i].reset();
    }
  }
  return *this;
}

std::uint64_t CompositeTree::size_for_height(int h) {
  if (h < 0) throw std::invalid_argument("size_for_height: negative height");
  return static_cast<std::uint64_t>(h) << h;
}

int CompositeTree::depth_of(std::uint64_t cnode) {
  return std::bit_width(cnode + 1) - 1;
}

int CompositeTree::node_height(std::uint64_t cnode) const {
  return height_ - depth_of(cnode);
}

DyadicInterval CompositeTree::node_label(std::uint64_t cnode) const {
  const int d = depth_of(cnode);
  const std::uint64_t pos = cnode + 1 - (std::uint64_t{1} << d);
  return DyadicInterval(root_label_.depth() + d, (root_label_.index() << d) + pos);
}

std::uint64_t CompositeTree::leaf_node_for(double x) const {
  const int leaf_depth = height_ - 1;
  const std::uint64_t scaled =
      static_cast<std::uint64_t>(std::ldexp(x, root_label_.depth() + leaf_depth));
  const std::uint64_t pos = scaled - (root_label_.index() << leaf_depth);
  return (std::uint64_t{1} << leaf_depth) - 1 + pos;
}

std::uint64_t CompositeTree::leaf_node_by_descent(double x) const {
  std::uint64_t c = 0;
  while (node_height(c) > 1) {
    c = node_label(c).left_half().contains(x) ? 2 * c + 1 : 2 * c + 2;
  }
  return c;
}

std::uint64_t CompositeTree::cell_owner(std::uint64_t local_cell) const {
  // inorder_ is sorted by offset; find the last node starting at or before
  // the cell. Own arrays tile the whole range, so the match is exact.
  std::size_t lo = 0, hi = inorder_.size();
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (offsets_[inorder_[mid]] <= local_cell)
      lo = mid;
    else
      hi = mid;
  }
  return inorder_[lo];
}

ElementaryTree& CompositeTree::ensure_tree(std::uint64_t cnode) {
  if (!trees_[cnode]) {
    trees_[cnode] = std::make_unique<ElementaryTree>(node_height(cnode), node_label(cnode),
                                                     base_offset_ + offsets_[cnode]);
  }
  return *trees_[cnode];
}

std::optional<std::uint64_t> CompositeTree::insert(double x) {
  if (!root_label_.contains(x)) throw std::invalid_argument("insert: value not admissible at the root");
  std::uint64_t c = leaf_node_for(x);
  while (true) {
    if (auto cell = ensure_tree(c).insert(x)) {
      ++size_;
      return cell;
    }
    if (c == 0) return std::nullopt;
    c = (c - 1) / 2;
  }
}

TreeEnsemble::TreeEnsemble(int height, std::uint64_t alpha, DyadicInterval root_label,
                           std::uint64_t base_offset)
    : prefix_(height, root_label, base_offset) {
  suffix_.resize(alpha);
}

TreeEnsemble& TreeEnsemble::operator=(const TreeEnsemble& other) {
  if (this == &other) return *this;
  prefix_ = other.prefix_;
  size_ = other.size_;
  copy_suffix(other);
  return *this;
}

void TreeEnsemble::copy_suffix(const TreeEnsemble& other) {
  size_ = other.size_;
  suffix_.resize(other.suffix_.size());
  for (std::size_t i = 0; i < suffix_.size(); ++i) {
    if (other.suffix_[i]) {
      if (suffix_[i])
        *suffix_[i] = *other.suffix_[i];
      else
        suffix_[i] = std::make_unique<ElementaryTree>(*other.suffix_[i]);
    } else {
      suffix_[i].reset();
    }
  }
}

std::optional<std::uint64_t> TreeEnsemble::insert(double x) {
  if (auto cell = prefix_.insert(x)) {
    ++size_;
    return cell;
  }
  for (std::size_t i = 0; i < suffix_.size(); ++i) {
    if (!suffix_[i]) {
      suffix_[i] = std::make_unique<ElementaryTree>(
          height(), root_label(), base_offset() + prefix_cell_count() + i * suffix_tree_cells());
    }
    if (auto cell = suffix_[i]->insert(x)) {
      ++size_;
      return cell;
    }
  }
  return std::nullopt;
}

std::pair<int, std::uint64_t> TreeEnsemble::unit_of(std::uint64_t cell) const {
  if (cell < prefix_cell_count()) return {0, prefix_.cell_owner(cell)};
  return {1, (cell - prefix_cell_count()) / suffix_tree_cells()};
}

TreeEnsemble::CostType TreeEnsemble::classify_adjacent(std::uint64_t cell_i, std::uint64_t cell_j) const {
  const auto a = unit_of(cell_i);
  const auto b = unit_of(cell_j);
  if (a == b) return CostType::kType1;
  if (a.first == 0 && b.first == 0) return CostType::kType2;
  return CostType::kType3;
}

}  // namespace onsort
