#include "doctest.h"

#include <vector>

#include "onsort/oracle.hpp"
#include "onsort/workloads.hpp"

using namespace onsort;

TEST_CASE("space lemma check: empty ensemble and negative control") {
  TreeEnsemble ens(2, 1, DyadicInterval{});
  std::vector<double> log;
  CHECK(oracle::check_space_lemma(oracle::view_of(ens), log).empty());

  // Plant a label with no elements behind it: the check must fire.
  auto view = oracle::view_of(ens);
  auto& root_tree = view.prefix_nodes[0];  // cnode 0, height 2
  root_tree.elements = 1;
  root_tree.labels.resize(7);
  root_tree.labels[0] = DyadicInterval{};
  root_tree.labels[1] = DyadicInterval(1, 0);
  root_tree.cells.resize(4);
  const auto violations = oracle::check_space_lemma(view, log);
  CHECK(!violations.empty());
}

TEST_CASE("admissibility check fires on a corrupted label") {
  ElementaryTree t(2, DyadicInterval{});
  t.insert(0.9);
  auto view = oracle::view_of(t);
  CHECK(oracle::check_ancestor_admissibility(view).empty());
  view.labels[1] = DyadicInterval(1, 0);  // [0, 1/2) above a 0.9 leaf
  CHECK(!oracle::check_ancestor_admissibility(view).empty());
}

TEST_CASE("cost lemma bounds on an empty ensemble are zero-tight") {
  TreeEnsemble ens(3, 2, DyadicInterval{});
  const auto r = oracle::check_cost_lemma(oracle::view_of(ens), 0);
  CHECK(r.type1 == 0.0);
  CHECK(r.type2 == 0.0);
  CHECK(r.type3 == 0.0);
  CHECK(r.ok());
}

TEST_CASE("cost lemma bounds hold across random replays") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const int h = 2 + static_cast<int>(rng.next() % 3);
    const std::uint64_t alpha = rng.next() % 3;
    TreeEnsemble ens(h, alpha, DyadicInterval{});
    std::uint64_t accepted = 0;
    for (int i = 0; i < 200; ++i) {
      if (ens.insert(rng.next_unit()).has_value()) ++accepted;
    }
    const auto r = oracle::check_cost_lemma(oracle::view_of(ens), accepted);
    CHECK(r.ok());
    CHECK(r.type1 <= r.bound1);
  }
}

TEST_CASE("partial-disjointness negative control via a forged view") {
  oracle::SorterView view;
  view.height = 2;
  oracle::TreeView t;
  t.height = 2;
  t.root_label = DyadicInterval{};
  t.elements = 1;
  t.labels.resize(7);
  t.labels[0] = DyadicInterval{};
  t.labels[1] = DyadicInterval(1, 1);
  t.labels[3] = DyadicInterval(2, 2);
  t.cells = {std::optional<double>{0.6}, std::nullopt, std::nullopt, std::nullopt};
  view.trees.push_back(t);
  view.trees.push_back(t);  // same partial internal node twice
  CHECK(!oracle::check_partial_disjoint(view).empty());
  CHECK(oracle::count_partial_roots(view) == 2);
}

TEST_CASE("exhaustive scans at toy scale find nothing") {
  const auto space = oracle::exhaustive_space_lemma_scan(2, 1, 4, 4);
  CHECK(space.sequences > 0);
  CHECK(space.violations == 0);

  const auto disjoint = oracle::exhaustive_partial_disjoint_scan(16, 1.0, 4, 4);
  CHECK(disjoint.sequences > 0);
  CHECK(disjoint.violations == 0);
}

TEST_CASE("naive cost matches structure snapshots") {
  SplitMix64 rng(66);
  SegmentedSorter s(256, 4);
  for (int i = 0; i < 256; ++i) s.insert(rng.next_unit());
  const auto snap = s.snapshot();
  CHECK(total_cost(snap, true).total_cost == oracle::naive_cost(snap, true));
  CHECK(total_cost(snap, false).total_cost == oracle::naive_cost(snap, false));
}
