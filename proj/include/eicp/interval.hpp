#pragma once

#include <vector>

namespace eicp {

/// Closed interval [lo, hi]; lo == hi is a point.
class Interval {
 public:
  /// Throws InvalidArgument when lo > hi or an endpoint is NaN.
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }

  bool contains(double x, double tol = 0.0) const noexcept {
    return x >= lo_ - tol && x <= hi_ + tol;
  }
  /// other is inside *this, endpoints compared with tol.
  bool contains(const Interval& other, double tol = 0.0) const noexcept {
    return other.lo_ >= lo_ - tol && other.hi_ <= hi_ + tol;
  }

  Interval shifted(double delta) const { return {lo_ + delta, hi_ + delta}; }

  bool operator==(const Interval&) const = default;

 private:
  double lo_;
  double hi_;
};

/// Finite union of closed intervals. normalize() sorts by lower endpoint and
/// merges members separated by at most 1e-12 (1 + max |endpoint|).
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> intervals, bool normalize_now = true);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool normalized() const noexcept { return normalized_; }
  bool empty() const noexcept { return intervals_.empty(); }

  void normalize();

  /// Smallest interval containing the union. Throws on an empty union.
  Interval hull() const;

  bool contains(double x, double tol = 0.0) const noexcept;

  IntervalUnion shifted(double delta) const;

  bool operator==(const IntervalUnion&) const = default;

 private:
  std::vector<Interval> intervals_;
  bool normalized_ = false;
};

}  // namespace eicp
