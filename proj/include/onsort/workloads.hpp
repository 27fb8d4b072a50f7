#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace onsort {

enum class WorkloadKind {
  kUniform,      // i.i.d. uniform on [0,1) from the seeded generator
  kSorted,       // k/n ascending
  kReversed,     // k/n descending
  kBitReversal,  // bitreverse(t)/2^bits, the midpoint-splitting adversary
  kGapSplitter,  // midpoint of the largest remaining gap, leftmost on ties
  kClustered,    // all values inside a width-delta band
  kRangeDoubler  // values escaping the current [min,max] each block
};

const char* workload_name(WorkloadKind kind);
WorkloadKind parse_workload(const std::string& name);

// Deterministic given (kind, n, seed, param). param is the band width for
// clustered and is ignored elsewhere. All values lie in [0,1] except
// range_doubler, whose range grows by design.
std::vector<double> generate(WorkloadKind kind, std::uint64_t n, std::uint64_t seed, double param = 0.0);

// One decimal value per line, full precision; the CLI input format.
void write_sequence(std::ostream& out, const std::vector<double>& values);
std::vector<double> read_sequence(std::istream& in);

// SplitMix64: the fixed portable generator behind the randomized kinds.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace onsort
