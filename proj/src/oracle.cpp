#include "onsort/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace onsort::oracle {

namespace {

// Containment decided from the interval endpoints in extended precision; the
// deliberately different route from the engine's scaled-floor comparison.
bool contains_ld(const DyadicInterval& iv, double x) {
  const long double lo = std::ldexp(static_cast<long double>(iv.index()), -iv.depth());
  const long double hi = std::ldexp(static_cast<long double>(iv.index() + 1), -iv.depth());
  return x >= lo && x < hi;
}

bool node_is_empty(const TreeView& t, std::uint64_t node) {
  if (node == 0) return t.elements == 0;
  const std::uint64_t leaf_start = (std::uint64_t{1} << t.height) - 1;
  if (node >= leaf_start) {
    return t.cells.empty() || !t.cells[node - leaf_start].has_value();
  }
  return t.labels.empty() || !t.labels[node].has_value();
}

std::optional<DyadicInterval> node_label(const TreeView& t, std::uint64_t node) {
  if (node == 0) return t.root_label;
  if (t.labels.empty() || !t.labels[node].has_value()) return std::nullopt;
  return t.labels[node];
}

}  // namespace

TreeView view_of(const ElementaryTree& tree) {
  TreeView v;
  v.height = tree.height();
  v.root_label = tree.root_label();
  v.base_offset = tree.base_offset();
  v.elements = tree.size();
  if (tree.size() > 0 || tree.is_marked(0)) {
    v.labels.resize(tree.node_count());
    for (std::uint64_t i = 0; i < tree.node_count(); ++i) {
      if (tree.is_marked(i)) v.labels[i] = tree.label(i);
    }
    v.cells.resize(tree.cell_count());
    for (std::uint64_t i = 0; i < tree.cell_count(); ++i) v.cells[i] = tree.cell(i);
  }
  return v;
}

namespace {

TreeView untouched_view(int height, DyadicInterval label, std::uint64_t base_offset) {
  TreeView v;
  v.height = height;
  v.root_label = label;
  v.base_offset = base_offset;
  return v;
}

}  // namespace

EnsembleView view_of(const TreeEnsemble& ensemble) {
  EnsembleView v;
  v.height = ensemble.height();
  v.root_label = ensemble.root_label();
  const CompositeTree& a = ensemble.prefix();
  v.prefix_nodes.reserve(a.node_count());
  for (std::uint64_t c = 0; c < a.node_count(); ++c) {
    if (const ElementaryTree* t = a.node_tree(c)) {
      v.prefix_nodes.push_back(view_of(*t));
    } else {
      v.prefix_nodes.push_back(
          untouched_view(a.node_height(c), a.node_label(c), a.base_offset() + a.node_offset(c)));
    }
  }
  for (std::uint64_t i = 0; i < ensemble.order(); ++i) {
    if (const ElementaryTree* t = ensemble.suffix_tree(i)) {
      v.suffix.push_back(view_of(*t));
    } else {
      v.suffix.push_back(untouched_view(
          ensemble.height(), ensemble.root_label(),
          ensemble.base_offset() + ensemble.prefix_cell_count() + i * ensemble.suffix_tree_cells()));
    }
  }
  return v;
}

EnsembleView view_of(const CompositeTree& tree) {
  EnsembleView v;
  v.height = tree.height();
  v.root_label = tree.root_label();
  v.prefix_nodes.reserve(tree.node_count());
  for (std::uint64_t c = 0; c < tree.node_count(); ++c) {
    if (const ElementaryTree* t = tree.node_tree(c)) {
      v.prefix_nodes.push_back(view_of(*t));
    } else {
      v.prefix_nodes.push_back(
          untouched_view(tree.node_height(c), tree.node_label(c), tree.base_offset() + tree.node_offset(c)));
    }
  }
  return v;
}

SorterView view_of(const SmallSpaceSorter& sorter) {
  SorterView v;
  v.height = sorter.tree_height();
  v.trees.reserve(sorter.tree_count());
  for (std::size_t i = 0; i < sorter.tree_count(); ++i) v.trees.push_back(view_of(sorter.tree(i)));
  return v;
}

std::vector<SpaceViolation> check_space_lemma(const EnsembleView& ens, std::span<const double> inserted) {
  std::vector<SpaceViolation> out;
  const int big_h = ens.height;
  for (int h = 1; h <= big_h; ++h) {
    // At tree height h every label in the ensemble has the same dyadic depth.
    const int depth = ens.root_label.depth() + (big_h - h);
    std::vector<std::uint64_t> labeled(std::uint64_t{1} << (depth - ens.root_label.depth()), 0);
    const std::uint64_t index_base = ens.root_label.index() << (depth - ens.root_label.depth());
    const auto collect = [&](const TreeView& t) {
      if (t.height < h) return;
      const int node_depth = t.height - h;
      const std::uint64_t first = (std::uint64_t{1} << node_depth) - 1;
      const std::uint64_t last = (std::uint64_t{2} << node_depth) - 1;
      for (std::uint64_t node = first; node < last; ++node) {
        if (node == 0) {
          if (t.elements > 0) ++labeled[t.root_label.index() - index_base];
        } else if (!t.labels.empty() && t.labels[node].has_value()) {
          ++labeled[t.labels[node]->index() - index_base];
        }
      }
    };
    for (const TreeView& t : ens.prefix_nodes) collect(t);
    for (const TreeView& t : ens.suffix) collect(t);
    for (std::uint64_t i = 0; i < labeled.size(); ++i) {
      if (labeled[i] == 0) continue;
      const DyadicInterval label(depth, index_base + i);
      std::uint64_t in_label = 0;
      for (double x : inserted) {
        if (contains_ld(label, x)) ++in_label;
      }
      const std::uint64_t required = (labeled[i] - 1) * (std::uint64_t{1} << h) + 1;
      if (in_label < required) out.push_back({label, h, labeled[i], in_label, required});
    }
  }
  return out;
}

std::vector<DisjointViolation> check_partial_disjoint(const SorterView& sorter) {
  std::vector<DisjointViolation> out;
  const int big_h = sorter.height;
  for (int h = 1; h < big_h; ++h) {
    const int node_depth = big_h - h;
    std::vector<std::size_t> owner(std::uint64_t{1} << node_depth, SIZE_MAX);
    const std::uint64_t first = (std::uint64_t{1} << node_depth) - 1;
    const std::uint64_t last = (std::uint64_t{2} << node_depth) - 1;
    for (std::size_t ti = 0; ti < sorter.trees.size(); ++ti) {
      const TreeView& t = sorter.trees[ti];
      for (std::uint64_t node = first; node < last; ++node) {
        const bool le = node_is_empty(t, 2 * node + 1);
        const bool re = node_is_empty(t, 2 * node + 2);
        if (le == re) continue;  // full or empty, not partial
        const auto label = node_label(t, node);
        if (!label) continue;
        if (owner[label->index()] != SIZE_MAX) {
          out.push_back({*label, h, owner[label->index()], ti});
        } else {
          owner[label->index()] = ti;
        }
      }
    }
  }
  return out;
}

std::size_t count_partial_roots(const SorterView& sorter) {
  std::size_t partial = 0;
  for (const TreeView& t : sorter.trees) {
    if (t.elements == 0 || t.height == 0) continue;
    const bool le = node_is_empty(t, 1);
    const bool re = node_is_empty(t, 2);
    if (le != re) ++partial;
  }
  return partial;
}

std::vector<AdmissibilityViolation> check_ancestor_admissibility(const TreeView& tree) {
  std::vector<AdmissibilityViolation> out;
  if (tree.cells.empty()) return out;
  const std::uint64_t leaf_start = (std::uint64_t{1} << tree.height) - 1;
  for (std::uint64_t cell = 0; cell < tree.cells.size(); ++cell) {
    if (!tree.cells[cell].has_value()) continue;
    const double v = *tree.cells[cell];
    for (std::uint64_t node = leaf_start + cell;; node = (node - 1) / 2) {
      const auto label = node_label(tree, node);
      if (label && !contains_ld(*label, v)) out.push_back({cell, node, v});
      if (node == 0) break;
    }
  }
  return out;
}

CostLemmaReport check_cost_lemma(const EnsembleView& ens, std::uint64_t n_inserted) {
  CostLemmaReport r;
  const int big_h = ens.height;
  const double len = static_cast<double>(std::ldexp(1.0L, -ens.root_label.depth()));
  const double per_cell = len / static_cast<double>(std::uint64_t{1} << big_h);
  r.bound1 = static_cast<double>(n_inserted) * big_h * per_cell;
  r.bound2 = 9.0 * r.bound1 + len;
  r.bound3 = static_cast<double>(ens.suffix.size()) * len;

  // Units in cell order: the composite prefix flattened in order (offsets
  // re-derived from the size recurrence), then the suffix trees.
  struct Unit {
    const TreeView* tree;
    bool in_prefix;
  };
  std::vector<Unit> units;
  if (!ens.prefix_nodes.empty()) {
    const auto flatten = [&](auto&& self, std::uint64_t cnode) -> void {
      const int h = big_h - (std::bit_width(cnode + 1) - 1);
      if (h > 1) self(self, 2 * cnode + 1);
      units.push_back({&ens.prefix_nodes[cnode], true});
      if (h > 1) self(self, 2 * cnode + 2);
    };
    flatten(flatten, 0);
  }
  for (const TreeView& t : ens.suffix) units.push_back({&t, false});

  bool have_prev = false;
  double prev_value = 0.0;
  std::size_t prev_unit = 0;
  for (std::size_t u = 0; u < units.size(); ++u) {
    const TreeView& t = *units[u].tree;
    for (std::uint64_t cell = 0; cell < t.cells.size(); ++cell) {
      if (!t.cells[cell].has_value()) continue;
      const double v = *t.cells[cell];
      if (have_prev) {
        const double d = std::abs(v - prev_value);
        if (u == prev_unit) {
          r.type1 += d;
        } else if (units[u].in_prefix && units[prev_unit].in_prefix) {
          r.type2 += d;
        } else {
          r.type3 += d;
        }
      }
      prev_value = v;
      prev_unit = u;
      have_prev = true;
    }
  }
  return r;
}

double naive_cost(const CellSnapshot& cells, bool sentinels) {
  double total = 0.0;
  double prev = 0.0;
  bool have = sentinels;
  for (std::size_t i = 0; i < cells.occupied.size(); ++i) {
    const double v = cells.occupied[i].second;
    if (have) total += std::abs(v - prev);
    prev = v;
    have = true;
  }
  if (sentinels) total += std::abs(1.0 - prev);
  return total;
}

double naive_cost_dense(const std::vector<std::optional<double>>& cells, bool sentinels) {
  double total = 0.0;
  double prev = 0.0;
  bool have = sentinels;
  for (const auto& c : cells) {
    if (!c.has_value()) continue;
    if (have) total += std::abs(*c - prev);
    prev = *c;
    have = true;
  }
  if (sentinels) total += std::abs(1.0 - prev);
  return total;
}

namespace {

// Fast in-place checks for the exhaustive scans. Counting logic mirrors the
// view-based checks; element tallies per dyadic index are maintained by the
// driver so each step is O(structure).

bool space_lemma_holds(const TreeEnsemble& ens, const std::vector<std::vector<std::uint32_t>>& tally,
                       std::vector<std::uint32_t>& scratch) {
  const int big_h = ens.height();
  const CompositeTree& a = ens.prefix();
  for (int h = 1; h <= big_h; ++h) {
    const int depth = big_h - h;  // root label [0,1)
    scratch.assign(std::size_t{1} << depth, 0);
    const auto collect = [&](const ElementaryTree* t) {
      if (t == nullptr || t->height() < h) return;
      const int node_depth = t->height() - h;
      const std::uint64_t first = (std::uint64_t{1} << node_depth) - 1;
      const std::uint64_t last = (std::uint64_t{2} << node_depth) - 1;
      for (std::uint64_t node = first; node < last; ++node) {
        if (node == 0) {
          if (t->size() > 0) ++scratch[t->root_label().index()];
        } else if (t->is_marked(node)) {
          ++scratch[t->label(node).index()];
        }
      }
    };
    for (std::uint64_t c = 0; c < a.node_count(); ++c) {
      if (a.node_height(c) >= h) collect(a.node_tree(c));
    }
    for (std::uint64_t i = 0; i < ens.order(); ++i) collect(ens.suffix_tree(i));
    for (std::size_t idx = 0; idx < scratch.size(); ++idx) {
      if (scratch[idx] == 0) continue;
      const std::uint64_t required = std::uint64_t{scratch[idx] - 1} * (std::uint64_t{1} << h) + 1;
      if (tally[depth][idx] < required) return false;
    }
  }
  return true;
}

bool partial_disjoint_holds(const SmallSpaceSorter& sorter, std::vector<std::uint8_t>& scratch) {
  const int big_h = sorter.tree_height();
  const auto child_empty = [](const ElementaryTree& t, std::uint64_t node) {
    if (t.is_leaf_node(node)) return !t.cell(node - (t.cell_count() - 1)).has_value();
    return !t.is_marked(node);
  };
  // Heights 1..H-1 must carry pairwise distinct partial labels; at the root
  // level at most one tree may be partial.
  std::size_t partial_roots = 0;
  for (int h = 1; h <= big_h; ++h) {
    const int node_depth = big_h - h;
    if (h < big_h) scratch.assign(std::size_t{1} << node_depth, 0);
    const std::uint64_t first = (std::uint64_t{1} << node_depth) - 1;
    const std::uint64_t last = (std::uint64_t{2} << node_depth) - 1;
    for (std::size_t ti = 0; ti < sorter.tree_count(); ++ti) {
      const ElementaryTree& t = sorter.tree(ti);
      for (std::uint64_t node = first; node < last; ++node) {
        if (node == 0 && t.size() == 0) continue;
        if (node != 0 && !t.is_marked(node)) continue;
        if (child_empty(t, 2 * node + 1) == child_empty(t, 2 * node + 2)) continue;
        if (h == big_h) {
          if (++partial_roots > 1) return false;
          continue;
        }
        const std::uint64_t idx = t.label(node).index();
        if (scratch[idx]) return false;
        scratch[idx] = 1;
      }
    }
  }
  return true;
}

}  // namespace

ExhaustiveStats exhaustive_space_lemma_scan(int height, std::uint64_t alpha, int grid_denominator,
                                            int max_len) {
  ExhaustiveStats stats;
  std::vector<double> grid(grid_denominator);
  for (int k = 0; k < grid_denominator; ++k)
    grid[k] = static_cast<double>(k) / static_cast<double>(grid_denominator);

  std::vector<TreeEnsemble> pool(max_len + 1, TreeEnsemble(height, alpha, DyadicInterval{}));
  std::vector<std::vector<std::uint32_t>> tally(height);
  for (int d = 0; d < height; ++d) tally[d].assign(std::size_t{1} << d, 0);
  std::vector<std::uint32_t> scratch;

  const auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == max_len) return;
    for (double v : grid) {
      pool[depth + 1] = pool[depth];
      if (!pool[depth + 1].insert(v).has_value()) continue;  // unchanged state
      for (int d = 0; d < height; ++d) ++tally[d][static_cast<std::size_t>(std::ldexp(v, d))];
      ++stats.sequences;
      if (!space_lemma_holds(pool[depth + 1], tally, scratch)) ++stats.violations;
      self(self, depth + 1);
      for (int d = 0; d < height; ++d) --tally[d][static_cast<std::size_t>(std::ldexp(v, d))];
    }
  };
  dfs(dfs, 0);
  return stats;
}

ExhaustiveStats exhaustive_partial_disjoint_scan(std::uint64_t capacity, double epsilon,
                                                 int grid_denominator, int max_len) {
  ExhaustiveStats stats;
  std::vector<double> grid(grid_denominator);
  for (int k = 0; k < grid_denominator; ++k)
    grid[k] = static_cast<double>(k) / static_cast<double>(grid_denominator);

  std::vector<SmallSpaceSorter> pool(max_len + 1, SmallSpaceSorter(capacity, epsilon));
  std::vector<std::uint8_t> scratch;

  const auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == max_len) return;
    for (double v : grid) {
      pool[depth + 1] = pool[depth];
      pool[depth + 1].insert(v);
      ++stats.sequences;
      if (!partial_disjoint_holds(pool[depth + 1], scratch)) ++stats.violations;
      self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  return stats;
}

}  // namespace onsort::oracle
