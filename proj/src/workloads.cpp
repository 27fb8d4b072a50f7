#include "onsort/workloads.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace onsort {

const char* workload_name(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::kUniform: return "uniform";
    case WorkloadKind::kSorted: return "sorted";
    case WorkloadKind::kReversed: return "reversed";
    case WorkloadKind::kBitReversal: return "bit_reversal";
    case WorkloadKind::kGapSplitter: return "gap_splitter";
    case WorkloadKind::kClustered: return "clustered";
    case WorkloadKind::kRangeDoubler: return "range_doubler";
  }
  return "unknown";
}

WorkloadKind parse_workload(const std::string& name) {
  for (WorkloadKind k : {WorkloadKind::kUniform, WorkloadKind::kSorted, WorkloadKind::kReversed,
                         WorkloadKind::kBitReversal, WorkloadKind::kGapSplitter,
                         WorkloadKind::kClustered, WorkloadKind::kRangeDoubler}) {
    if (name == workload_name(k)) return k;
  }
  throw std::invalid_argument("unknown workload kind: " + name);
}

namespace {

std::vector<double> gen_uniform(std::uint64_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = rng.next_unit();
  return out;
}

std::vector<double> gen_sorted(std::uint64_t n, bool reversed) {
  std::vector<double> out(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint64_t i = reversed ? n - 1 - k : k;
    out[k] = static_cast<double>(i) / static_cast<double>(n);
  }
  return out;
}

std::vector<double> gen_bit_reversal(std::uint64_t n) {
  const int bits = n <= 1 ? 1 : std::bit_width(n - 1);
  std::vector<double> out(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    std::uint64_t r = 0;
    for (int b = 0; b < bits; ++b) {
      if (t & (std::uint64_t{1} << b)) r |= std::uint64_t{1} << (bits - 1 - b);
    }
    out[t] = std::ldexp(static_cast<double>(r), -bits);
  }
  return out;
}

std::vector<double> gen_gap_splitter(std::uint64_t n) {
  // Max-heap on (width, leftmost): widest gap first, leftmost breaks ties.
  struct Gap {
    double width, left;
    bool operator<(const Gap& o) const {
      if (width != o.width) return width < o.width;
      return left > o.left;
    }
  };
  std::priority_queue<Gap> gaps;
  gaps.push({1.0, 0.0});
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const Gap g = gaps.top();
    gaps.pop();
    const double mid = g.left + g.width / 2.0;
    out.push_back(mid);
    gaps.push({mid - g.left, g.left});
    gaps.push({g.left + g.width - mid, mid});
  }
  return out;
}

std::vector<double> gen_clustered(std::uint64_t n, std::uint64_t seed, double delta) {
  if (!(delta >= 0.0) || delta > 1.0) throw std::invalid_argument("clustered: band width outside [0, 1]");
  SplitMix64 rng(seed);
  const double start = rng.next_unit() * (1.0 - delta);
  std::vector<double> out(n);
  for (auto& v : out) v = start + rng.next_unit() * delta;
  return out;
}

std::vector<double> gen_range_doubler(std::uint64_t n, std::uint64_t seed) {
  // Blocks of doubling size inside the current [lo, hi]; each block ends with
  // a value beyond hi, which doubles the range under the guess-update rule.
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  out.push_back(0.0);
  if (n > 1) out.push_back(1.0);
  double lo = 0.0, hi = 1.0;
  std::uint64_t block = 2;
  while (out.size() < n) {
    for (std::uint64_t i = 0; i < block && out.size() < n; ++i) {
      out.push_back(lo + rng.next_unit() * (hi - lo));
    }
    if (out.size() < n) {
      out.push_back(hi + 0.5 * (hi - lo));  // escapes; new range is [lo, 2*hi - lo]
      hi = 2.0 * hi - lo;
    }
    block *= 2;
  }
  return out;
}

}  // namespace

std::vector<double> generate(WorkloadKind kind, std::uint64_t n, std::uint64_t seed, double param) {
  if (n < 1) throw std::invalid_argument("generate: n must be at least 1");
  switch (kind) {
    case WorkloadKind::kUniform: return gen_uniform(n, seed);
    case WorkloadKind::kSorted: return gen_sorted(n, false);
    case WorkloadKind::kReversed: return gen_sorted(n, true);
    case WorkloadKind::kBitReversal: return gen_bit_reversal(n);
    case WorkloadKind::kGapSplitter: return gen_gap_splitter(n);
    case WorkloadKind::kClustered: return gen_clustered(n, seed, param);
    case WorkloadKind::kRangeDoubler: return gen_range_doubler(n, seed);
  }
  throw std::invalid_argument("generate: unknown workload kind");
}

void write_sequence(std::ostream& out, const std::vector<double>& values) {
  char buf[40];
  for (double v : values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out << buf;
  }
}

std::vector<double> read_sequence(std::istream& in) {
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(line, &pos);
    out.push_back(v);
  }
  return out;
}

}  // namespace onsort
