#include "onsort/elementary.hpp"

#include <limits>
#include <stdexcept>

namespace onsort {

ElementaryTree::ElementaryTree(int height, DyadicInterval root_label, std::uint64_t base_offset)
    : height_(height), root_label_(root_label), base_offset_(base_offset) {
  if (height < 0 || height > kMaxHeight) throw std::invalid_argument("elementary tree height out of range");
  if (root_label.depth() + height > DyadicInterval::kMaxDepth)
    throw std::invalid_argument("elementary tree would exceed the dyadic depth limit");
}

void ElementaryTree::materialize() {
  const std::uint64_t nodes = node_count();
  label_depth_.assign(nodes, -1);
  label_index_.assign(nodes, 0);
  cells_.assign(cell_count(), std::numeric_limits<double>::quiet_NaN());
  free_.resize(nodes);
  // free leaves under node at depth d: 2^(h-d)
  std::uint64_t first = 0;
  for (int d = 0; d <= height_; ++d) {
    const std::uint64_t count = std::uint64_t{1} << d;
    const std::uint32_t leaves = std::uint32_t{1} << (height_ - d);
    for (std::uint64_t i = first; i < first + count; ++i) free_[i] = leaves;
    first += count;
  }
  label_depth_[0] = static_cast<std::int8_t>(root_label_.depth());
  label_index_[0] = root_label_.index();
}

bool ElementaryTree::is_marked(std::uint64_t node) const {
  if (node == 0) return true;
  if (!materialized()) return false;
  return label_depth_[node] >= 0;
}

DyadicInterval ElementaryTree::label(std::uint64_t node) const {
  if (node == 0) return root_label_;
  if (!is_marked(node)) throw std::invalid_argument("label: node is unmarked");
  return DyadicInterval(label_depth_[node], label_index_[node]);
}

std::optional<double> ElementaryTree::cell(std::uint64_t i) const {
  if (!materialized() || std::isnan(cells_[i])) return std::nullopt;
  return cells_[i];
}

bool ElementaryTree::is_empty_node(std::uint64_t node) const {
  if (node == 0) return size_ == 0;
  return !is_marked(node);
}

NodeState ElementaryTree::classify(std::uint64_t node) const {
  if (is_leaf_node(node)) {
    return is_empty_node(node) ? NodeState::kEmpty : NodeState::kFull;
  }
  const int empties = (is_empty_node(2 * node + 1) ? 1 : 0) + (is_empty_node(2 * node + 2) ? 1 : 0);
  if (empties == 2) return NodeState::kEmpty;
  if (empties == 1) return NodeState::kPartial;
  return NodeState::kFull;
}

double ElementaryTree::cost() const {
  double total = 0.0;
  double prev = 0.0;
  bool have_prev = false;
  for (double v : cells_) {
    if (std::isnan(v)) continue;
    if (have_prev) total += std::abs(v - prev);
    prev = v;
    have_prev = true;
  }
  return total;
}

std::optional<std::uint64_t> ElementaryTree::insert(double x) {
  if (!root_label_.contains(x)) throw std::invalid_argument("insert: value not admissible at the root");
  if (!materialized()) materialize();

  if (height_ == 0) {
    if (!std::isnan(cells_[0])) return std::nullopt;
    cells_[0] = x;
    free_[0] = 0;
    size_ = 1;
    return base_offset_;
  }

  // In-order descent over the marked region. Unmarked nodes are reached only
  // from a marked admissible parent, and descending left from one always
  // succeeds, so all mutation happens on the single success path below.
  std::vector<std::uint64_t> pending;
  pending.reserve(2 * static_cast<std::size_t>(height_) + 2);
  pending.push_back(0);
  while (!pending.empty()) {
    const std::uint64_t v = pending.back();
    pending.pop_back();
    if (is_marked(v)) {
      if (!label(v).contains(x)) continue;     // inadmissible: this probe fails
      if (is_leaf_node(v)) continue;           // occupied leaf
      if (free_[v] == 0) continue;             // full subtree always fails
      pending.push_back(2 * v + 2);
      pending.push_back(2 * v + 1);
      continue;
    }
    // Success path: label the chain of left descendants and write the leaf.
    std::uint64_t w = v;
    DyadicInterval lab = label((w - 1) / 2).half_containing(x);
    while (true) {
      label_depth_[w] = static_cast<std::int8_t>(lab.depth());
      label_index_[w] = lab.index();
      if (is_leaf_node(w)) break;
      lab = lab.half_containing(x);
      w = 2 * w + 1;
    }
    const std::uint64_t leaf_cell = w - (cell_count() - 1);
    cells_[leaf_cell] = x;
    ++size_;
    for (std::uint64_t u = w;; u = (u - 1) / 2) {
      --free_[u];
      if (u == 0) break;
    }
    return base_offset_ + leaf_cell;
  }
  return std::nullopt;
}

}  // namespace onsort
