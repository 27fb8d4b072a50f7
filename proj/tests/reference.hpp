#pragma once

// Test-only reference implementations: the insertion procedures written as
// plain recursion over map-based state, kept independent of the library so
// the iterative engine can be checked against them step by step.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "onsort/dyadic.hpp"

namespace refimpl {

using onsort::DyadicInterval;

struct RefTree {
  int height = 0;
  DyadicInterval root_label;
  std::map<std::uint64_t, DyadicInterval> labels;  // marked non-root nodes
  std::map<std::uint64_t, double> cells;           // occupied leaves by cell

  bool is_leaf(std::uint64_t node) const { return node + 1 >= (std::uint64_t{1} << height); }
  std::uint64_t leaf_cell(std::uint64_t node) const { return node - ((std::uint64_t{1} << height) - 1); }

  bool marked(std::uint64_t node) const { return node == 0 || labels.count(node) > 0; }
  DyadicInterval label(std::uint64_t node) const {
    return node == 0 ? root_label : labels.at(node);
  }
};

// The four-case recursion, verbatim. Returns the occupied cell on success.
inline std::optional<std::uint64_t> ref_insert_at(RefTree& t, std::uint64_t node, double x) {
  if (t.height == 0) {  // degenerate single-cell tree
    if (t.cells.count(0)) return std::nullopt;
    t.cells[0] = x;
    return 0;
  }
  if (!t.marked(node)) {
    const DyadicInterval lab = t.label((node - 1) / 2).half_containing(x);
    t.labels.emplace(node, lab);
    if (t.is_leaf(node)) {
      t.cells[t.leaf_cell(node)] = x;
      return t.leaf_cell(node);
    }
    return ref_insert_at(t, 2 * node + 1, x);
  }
  if (!t.label(node).contains(x)) return std::nullopt;
  if (t.is_leaf(node)) return std::nullopt;  // occupied leaf
  if (auto r = ref_insert_at(t, 2 * node + 1, x)) return r;
  return ref_insert_at(t, 2 * node + 2, x);
}

inline std::optional<std::uint64_t> ref_insert(RefTree& t, double x) {
  return ref_insert_at(t, 0, x);
}

// Composite reference: static labels, in-order layout, leaf-to-root
// escalation, all re-derived here.
struct RefComposite {
  int height = 1;
  DyadicInterval root_label;
  std::map<std::uint64_t, RefTree> nodes;  // by cnode, created on demand

  static int depth_of(std::uint64_t cnode) {
    int d = 0;
    while (cnode > 0) {
      cnode = (cnode - 1) / 2;
      ++d;
    }
    return d;
  }

  DyadicInterval static_label(std::uint64_t cnode) const {
    DyadicInterval lab = root_label;
    std::vector<bool> rights;
    while (cnode > 0) {
      rights.push_back(cnode % 2 == 0);
      cnode = (cnode - 1) / 2;
    }
    for (auto it = rights.rbegin(); it != rights.rend(); ++it) {
      lab = *it ? lab.right_half() : lab.left_half();
    }
    return lab;
  }

  RefTree& node(std::uint64_t cnode) {
    auto it = nodes.find(cnode);
    if (it == nodes.end()) {
      RefTree t;
      t.height = height - depth_of(cnode);
      t.root_label = static_label(cnode);
      it = nodes.emplace(cnode, std::move(t)).first;
    }
    return it->second;
  }

  // Offset of a cnode's array, from the in-order flattening.
  std::uint64_t offset(std::uint64_t target) const {
    std::uint64_t result = 0;
    bool found = false;
    std::uint64_t pos = 0;
    const auto walk = [&](auto&& self, std::uint64_t cnode, int h) -> void {
      if (found) return;
      if (h > 1) self(self, 2 * cnode + 1, h - 1);
      if (found) return;
      if (cnode == target) {
        result = pos;
        found = true;
        return;
      }
      pos += std::uint64_t{1} << h;
      if (h > 1) self(self, 2 * cnode + 2, h - 1);
    };
    walk(walk, 0, height);
    return result;
  }

  std::optional<std::uint64_t> insert(double x) {
    // Find the admissible leaf by label comparisons.
    std::uint64_t c = 0;
    for (int h = height; h > 1; --h) {
      c = static_label(2 * c + 1).contains(x) ? 2 * c + 1 : 2 * c + 2;
    }
    while (true) {
      if (auto r = ref_insert(node(c), x)) return offset(c) + *r;
      if (c == 0) return std::nullopt;
      c = (c - 1) / 2;
    }
  }
};

}  // namespace refimpl
