#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "onsort/workloads.hpp"

using onsort::generate;
using onsort::WorkloadKind;

TEST_CASE("sorted and reversed ramps") {
  CHECK(generate(WorkloadKind::kSorted, 4, 0) == std::vector<double>{0.0, 0.25, 0.5, 0.75});
  CHECK(generate(WorkloadKind::kReversed, 4, 0) == std::vector<double>{0.75, 0.5, 0.25, 0.0});
}

TEST_CASE("bit reversal permutes the grid") {
  CHECK(generate(WorkloadKind::kBitReversal, 4, 0) == std::vector<double>{0.0, 0.5, 0.25, 0.75});
  const auto v = generate(WorkloadKind::kBitReversal, 8, 0);
  CHECK(v == std::vector<double>{0.0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875});
}

TEST_CASE("gap splitter halves the widest gap, leftmost first") {
  CHECK(generate(WorkloadKind::kGapSplitter, 3, 0) == std::vector<double>{0.5, 0.25, 0.75});
  const auto v = generate(WorkloadKind::kGapSplitter, 7, 0);
  CHECK(v == std::vector<double>{0.5, 0.25, 0.75, 0.125, 0.375, 0.625, 0.875});
}

TEST_CASE("generation is deterministic and in range") {
  for (WorkloadKind kind : {WorkloadKind::kUniform, WorkloadKind::kSorted, WorkloadKind::kReversed,
                            WorkloadKind::kBitReversal, WorkloadKind::kGapSplitter,
                            WorkloadKind::kClustered}) {
    const auto a = generate(kind, 500, 42, 0.1);
    const auto b = generate(kind, 500, 42, 0.1);
    CHECK(a == b);
    for (double x : a) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
    }
  }
  const auto c = generate(WorkloadKind::kUniform, 100, 1);
  const auto d = generate(WorkloadKind::kUniform, 100, 2);
  CHECK(c != d);
}

TEST_CASE("clustered values stay inside the band") {
  const auto v = generate(WorkloadKind::kClustered, 1000, 9, 0.05);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  CHECK(*hi - *lo <= 0.05);
}

TEST_CASE("range doubler escapes and doubles the range") {
  const auto v = generate(WorkloadKind::kRangeDoubler, 200, 4);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 1.0);
  double lo = 0.0, hi = 1.0;
  int escapes = 0;
  for (std::size_t i = 2; i < v.size(); ++i) {
    if (v[i] > hi) {
      ++escapes;
      const double nhi = 2.0 * hi - lo;
      CHECK(v[i] <= nhi);
      hi = nhi;
    }
    CHECK(v[i] >= lo);
  }
  CHECK(escapes >= 4);
}

TEST_CASE("sequences round-trip through the text format") {
  const auto v = generate(WorkloadKind::kUniform, 300, 123);
  std::stringstream io;
  onsort::write_sequence(io, v);
  CHECK(onsort::read_sequence(io) == v);
}

TEST_CASE("workload names round-trip") {
  for (WorkloadKind kind : {WorkloadKind::kUniform, WorkloadKind::kSorted, WorkloadKind::kReversed,
                            WorkloadKind::kBitReversal, WorkloadKind::kGapSplitter,
                            WorkloadKind::kClustered, WorkloadKind::kRangeDoubler}) {
    CHECK(onsort::parse_workload(onsort::workload_name(kind)) == kind);
  }
  CHECK_THROWS_AS(onsort::parse_workload("swirl"), std::invalid_argument);
}
