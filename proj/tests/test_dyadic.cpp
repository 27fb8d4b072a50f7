#include "doctest.h"

#include <cmath>
#include <vector>

#include "onsort/dyadic.hpp"

using onsort::DyadicInterval;

namespace {

// Direct rational comparison: x against the interval endpoints, both sides
// scaled to integers. x = mant * 2^(exp-53) with mant < 2^53, so
//   x >= j/2^k  <=>  mant * 2^(exp-53+k) >= j,
// and every quantity fits in __int128 for depth <= 60.
bool rational_contains(const DyadicInterval& iv, double x) {
  if (x < 0.0 || x >= 1.0) return false;
  int exp = 0;
  const double m = std::frexp(x, &exp);  // x = m * 2^exp, m in [0.5, 1)
  const __int128 mant = static_cast<__int128>(std::ldexp(m, 53));
  const int shift = exp - 53 + iv.depth();
  const auto at_least = [&](std::uint64_t j) {
    const __int128 rhs = static_cast<__int128>(j);
    if (shift >= 0) return mant << shift >= rhs;
    if (shift <= -120) return rhs <= 0;
    return mant >= rhs << -shift;
  };
  return at_least(iv.index()) && !at_least(iv.index() + 1);
}

}  // namespace

TEST_CASE("halving arithmetic") {
  const DyadicInterval unit;
  CHECK(unit.left_half() == DyadicInterval(1, 0));
  CHECK(unit.right_half() == DyadicInterval(1, 1));
  CHECK(DyadicInterval(2, 3).left_half() == DyadicInterval(3, 6));
  CHECK(DyadicInterval(2, 3).right_half() == DyadicInterval(3, 7));

  DyadicInterval iv = unit;
  for (int k = 1; k <= 20; ++k) {
    iv = iv.left_half();
    CHECK(iv.depth() == k);
    CHECK(iv.index() == 0);
    CHECK(iv.upper() == doctest::Approx(std::ldexp(1.0, -k)));
  }
}

TEST_CASE("containment is exact at the boundaries") {
  CHECK(DyadicInterval(1, 1).contains(0.5));
  CHECK(!DyadicInterval(1, 0).contains(0.5));
  CHECK(DyadicInterval(2, 1).contains(0.3));
  CHECK(DyadicInterval().contains(0.0));
  CHECK(!DyadicInterval().contains(1.0));
  CHECK(!DyadicInterval().contains(-0.25));
}

TEST_CASE("half_containing picks the unique half") {
  const DyadicInterval unit;
  CHECK(unit.half_containing(0.7) == DyadicInterval(1, 1));
  CHECK(unit.half_containing(0.49) == DyadicInterval(1, 0));
  CHECK(DyadicInterval(1, 1).half_containing(0.75) == DyadicInterval(2, 3));
  CHECK_THROWS_AS(DyadicInterval(1, 0).half_containing(0.75), std::invalid_argument);
}

TEST_CASE("halves partition the parent exactly") {
  // Exhaustive at small depth over a fine grid.
  for (int depth = 0; depth <= 5; ++depth) {
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << depth); ++j) {
      const DyadicInterval iv(depth, j);
      const DyadicInterval l = iv.left_half(), r = iv.right_half();
      for (int g = 0; g < 256; ++g) {
        const double x = g / 256.0;
        const bool in = iv.contains(x);
        CHECK(in == (l.contains(x) || r.contains(x)));
        CHECK(!(l.contains(x) && r.contains(x)));
      }
    }
  }
}

TEST_CASE("containment agrees with the rational comparison") {
  std::uint64_t state = 12345;
  const auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  };
  for (int i = 0; i < 20000; ++i) {
    const int depth = static_cast<int>(next() % 20);
    const std::uint64_t index = next() % (std::uint64_t{1} << depth);
    const DyadicInterval iv(depth, index);
    const double x = static_cast<double>(next() >> 11) * 0x1.0p-53;
    CHECK(iv.contains(x) == rational_contains(iv, x));
  }
}

TEST_CASE("laminarity of repeated halving") {
  // Any two intervals reachable from the unit root nest or are disjoint.
  std::vector<DyadicInterval> all;
  for (int depth = 0; depth <= 4; ++depth) {
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << depth); ++j) all.emplace_back(depth, j);
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      const bool nest = a.contains_interval(b) || b.contains_interval(a);
      bool overlap = false;
      for (int g = 0; g < 64; ++g) {
        const double x = g / 64.0;
        if (a.contains(x) && b.contains(x)) overlap = true;
      }
      if (!nest) CHECK(!overlap);
      if (overlap) CHECK(nest);
    }
  }
}

TEST_CASE("depth limit") {
  DyadicInterval iv;
  for (int k = 0; k < DyadicInterval::kMaxDepth; ++k) iv = iv.left_half();
  CHECK(iv.depth() == DyadicInterval::kMaxDepth);
  CHECK_THROWS_AS(iv.left_half(), std::length_error);
  CHECK_THROWS_AS(iv.right_half(), std::length_error);
}
