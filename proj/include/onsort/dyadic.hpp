#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace onsort {

// Half-open dyadic interval [j/2^k, (j+1)/2^k) of the unit range, stored as
// the integer pair (depth k, index j). Membership and halving are decided by
// integer arithmetic so boundary values resolve exactly; endpoint doubles are
// derived for reporting, never stored.
//
// Scaling a double by 2^k is exact (exponent shift), so
//   x in [j/2^k, (j+1)/2^k)  <=>  floor(x * 2^k) == j
// holds without rounding error for any depth we support.
class DyadicInterval {
 public:
  static constexpr int kMaxDepth = 60;

  constexpr DyadicInterval() = default;  // [0, 1)
  DyadicInterval(int depth, std::uint64_t index) : depth_(depth), index_(index) {
    if (depth < 0 || depth > kMaxDepth) throw std::invalid_argument("dyadic depth out of range");
    if (depth < 64 && index >> depth != 0) throw std::invalid_argument("dyadic index out of range");
  }

  int depth() const { return depth_; }
  std::uint64_t index() const { return index_; }

  DyadicInterval left_half() const {
    check_split_depth();
    return DyadicInterval(depth_ + 1, index_ << 1);
  }

  DyadicInterval right_half() const {
    check_split_depth();
    return DyadicInterval(depth_ + 1, (index_ << 1) | 1);
  }

  bool contains(double x) const {
    if (!(x >= 0.0) || x >= 1.0) return false;
    return static_cast<std::uint64_t>(std::ldexp(x, depth_)) == index_;
  }

  // Whichever half of this interval contains x; exactly one does.
  DyadicInterval half_containing(double x) const {
    if (!contains(x)) throw std::invalid_argument("half_containing: value outside interval");
    check_split_depth();
    return DyadicInterval(depth_ + 1, static_cast<std::uint64_t>(std::ldexp(x, depth_ + 1)));
  }

  // True if `other` is a (not necessarily proper) sub-interval of this one.
  bool contains_interval(const DyadicInterval& other) const {
    if (other.depth_ < depth_) return false;
    return (other.index_ >> (other.depth_ - depth_)) == index_;
  }

  double lower() const { return std::ldexp(static_cast<double>(index_), -depth_); }
  double upper() const { return std::ldexp(static_cast<double>(index_ + 1), -depth_); }
  double length() const { return std::ldexp(1.0, -depth_); }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  friend std::strong_ordering operator<=>(const DyadicInterval& a, const DyadicInterval& b) {
    if (auto c = a.depth_ <=> b.depth_; c != 0) return c;
    return a.index_ <=> b.index_;
  }

 private:
  void check_split_depth() const {
    if (depth_ >= kMaxDepth) throw std::length_error("dyadic depth limit exceeded");
  }

  int depth_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace onsort
