#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "onsort/oracle.hpp"
#include "onsort/sorters.hpp"
#include "onsort/workloads.hpp"

using onsort::EnsembleSorter;
using onsort::Regime;
using onsort::SegmentedSorter;
using onsort::SmallSpaceSorter;

TEST_CASE("small-space height formula") {
  CHECK(SmallSpaceSorter::height_for(1024, 0.5) == 5);
  SmallSpaceSorter s(1024, 0.5);
  CHECK(s.tree_height() == 5);
  s.insert(0.3);
  CHECK(s.allocated_cells() == 32);  // one height-5 tree
}

TEST_CASE("small-space epsilon range is enforced") {
  CHECK_THROWS_AS(SmallSpaceSorter(1024, 0.001), std::invalid_argument);
  CHECK_THROWS_AS(SmallSpaceSorter(1024, 1.5), std::invalid_argument);
  CHECK_NOTHROW(SmallSpaceSorter(1024, 1.0));
  CHECK_NOTHROW(SmallSpaceSorter(1024, SmallSpaceSorter::min_epsilon(1024)));
}

TEST_CASE("first insertion lands in the first cell") {
  SmallSpaceSorter s(1024, 0.5);
  CHECK(s.insert(0.77) == 0);
}

TEST_CASE("a full first tree hands the element to a fresh tree") {
  SmallSpaceSorter s(1024, 0.5);  // height 5, 32 cells per tree
  for (int i = 0; i < 32; ++i) CHECK(s.insert(0.5) < 32);
  CHECK(s.tree_count() == 1);
  CHECK(s.insert(0.5) == 32);
  CHECK(s.tree_count() == 2);
}

TEST_CASE("capacity is enforced") {
  SmallSpaceSorter s(16, 1.0);
  for (int i = 0; i < 16; ++i) s.insert(0.5);
  CHECK_THROWS_AS(s.insert(0.5), std::invalid_argument);
}

TEST_CASE("unused space stays below eps*n on every prefix") {
  onsort::SplitMix64 rng(5);
  for (double eps : {0.25, 0.5, 1.0}) {
    const std::uint64_t n = 512;
    SmallSpaceSorter s(n, eps);
    for (std::uint64_t i = 0; i < n; ++i) {
      s.insert(rng.next_unit());
      CHECK(s.unused_cells() <= static_cast<std::uint64_t>(eps * n));
      CHECK(s.allocated_cells() <= static_cast<std::uint64_t>((1.0 + eps) * n));
    }
    CHECK(s.tree_count() <= static_cast<std::size_t>(2.0 * (1.0 + 1.0 / eps) * std::log2(n)) + 1);
  }
}

TEST_CASE("partial labels stay disjoint under replay and the check can fire") {
  onsort::SplitMix64 rng(9);
  SmallSpaceSorter s(256, 0.5);
  for (int i = 0; i < 256; ++i) {
    s.insert(rng.next_unit());
    const auto view = onsort::oracle::view_of(s);
    CHECK(onsort::oracle::check_partial_disjoint(view).empty());
    CHECK(onsort::oracle::count_partial_roots(view) <= 1);
  }

  // Negative control: two same-labeled partial nodes must be reported.
  auto view = onsort::oracle::view_of(s);
  REQUIRE(view.trees.size() >= 1);
  onsort::oracle::TreeView forged = view.trees[0];
  view.trees.push_back(forged);
  CHECK(!onsort::oracle::check_partial_disjoint(view).empty());
}

TEST_CASE("ensemble sorter space formula and worked example") {
  EnsembleSorter s(1024, 4);
  CHECK(s.height() == 8);
  CHECK(s.allocated_cells() == 3072);  // 8*256 prefix + 4*256 suffix
  CHECK(s.rounded_capacity() == 1024);

  // Rounded capacity and parameter.
  EnsembleSorter t(1000, 3);
  CHECK(t.rounded_capacity() == 1024);
  CHECK(t.alpha() == 2);
  CHECK(t.capacity() == 1000);
}

TEST_CASE("ensemble sorter accepts n identical elements") {
  EnsembleSorter s(1024, 4);
  for (int i = 0; i < 1024; ++i) CHECK_NOTHROW(s.insert(0.0));
  CHECK(s.inserted() == 1024);
  CHECK_THROWS_AS(s.insert(0.0), std::invalid_argument);  // capacity, not failure
}

TEST_CASE("ensemble sorter accepts uniform input at alpha = log2 n") {
  EnsembleSorter s(1024, 10);
  onsort::SplitMix64 rng(77);
  for (int i = 0; i < 1024; ++i) CHECK_NOTHROW(s.insert(rng.next_unit()));
}

TEST_CASE("segmented sorter routing and space") {
  SegmentedSorter s(256, 2);
  CHECK(s.allocated_cells() == 4096);  // 2 * 256 * 8

  SegmentedSorter s4(256, 4);
  CHECK(s4.route(0.6) == 2);  // [1/2, 3/4)
  CHECK(s4.tree(2).root_label() == onsort::DyadicInterval(2, 2));
  CHECK(s4.route(0.0) == 0);
  CHECK(s4.route(0.999) == 3);
}

TEST_CASE("segmented sorter accepts n identical elements in one tree") {
  SegmentedSorter s(256, 2);
  for (int i = 0; i < 256; ++i) CHECK_NOTHROW(s.insert(0.7));
  CHECK(s.tree(1).size() == 256);
  CHECK(s.tree(0).size() == 0);
}

TEST_CASE("structure selection by space budget") {
  const auto c1 = onsort::select_structure(1.0, 1024);
  CHECK(c1.regime == Regime::kEnsemble);
  CHECK(c1.parameter == 8);

  const auto c2 = onsort::select_structure(10.0, 1024);  // gamma = log2 n boundary
  CHECK(c2.regime == Regime::kSegmented);
  CHECK(c2.parameter == 1);

  const auto c3 = onsort::select_structure(100.0, 1024);  // gamma = log2^2 n
  CHECK(c3.regime == Regime::kSegmented);
  CHECK(c3.parameter == 8);

  CHECK_THROWS_AS(onsort::select_structure(0.5, 1024), std::invalid_argument);
  CHECK_THROWS_AS(onsort::select_structure(101.0, 1024), std::invalid_argument);
}

TEST_CASE("selection is monotone in the space budget") {
  double prev_alpha = 1e9;
  bool seen_segmented = false;
  for (double gamma = 1.0; gamma <= 100.0; gamma *= 2.0) {
    const auto c = onsort::select_structure(std::min(gamma, 100.0), 1024);
    if (c.regime == Regime::kEnsemble) {
      CHECK(!seen_segmented);  // regimes do not interleave
      CHECK(static_cast<double>(c.parameter) <= prev_alpha);
      prev_alpha = static_cast<double>(c.parameter);
    } else {
      seen_segmented = true;
    }
  }
  CHECK(seen_segmented);
}

TEST_CASE("snapshots enumerate occupied cells in ascending order") {
  onsort::SplitMix64 rng(13);
  SmallSpaceSorter s(256, 0.5);
  EnsembleSorter e(256, 2);
  SegmentedSorter g(256, 2);
  for (int i = 0; i < 256; ++i) {
    const double x = rng.next_unit();
    s.insert(x);
    e.insert(x);
    g.insert(x);
  }
  for (const auto& snap : {s.snapshot(), e.snapshot(), g.snapshot()}) {
    CHECK(snap.occupied.size() == 256);
    for (std::size_t i = 1; i < snap.occupied.size(); ++i) {
      CHECK(snap.occupied[i - 1].first < snap.occupied[i].first);
    }
    CHECK(snap.occupied.back().first < snap.cell_count);
  }
}
