#include "eicp/interval.hpp"

#include <algorithm>
#include <cmath>

#include "eicp/error.hpp"

namespace eicp {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw Error(ErrorCode::InvalidArgument, "NaN endpoint");
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "inverted interval");
}

IntervalUnion::IntervalUnion(std::vector<Interval> intervals, bool normalize_now)
    : intervals_(std::move(intervals)) {
  if (normalize_now) normalize();
}

void IntervalUnion::normalize() {
  if (intervals_.empty()) {
    normalized_ = true;
    return;
  }
  double magnitude = 0.0;
  for (const Interval& iv : intervals_)
    magnitude = std::max({magnitude, std::abs(iv.lo()), std::abs(iv.hi())});
  const double merge_tol = 1e-12 * (1.0 + magnitude);

  std::sort(intervals_.begin(), intervals_.end(), [](const Interval& x, const Interval& y) {
    return x.lo() < y.lo() || (x.lo() == y.lo() && x.hi() < y.hi());
  });
  std::vector<Interval> merged;
  merged.push_back(intervals_.front());
  for (std::size_t k = 1; k < intervals_.size(); ++k) {
    const Interval& next = intervals_[k];
    const Interval& last = merged.back();
    if (next.lo() <= last.hi() + merge_tol) {
      merged.back() = Interval(last.lo(), std::max(last.hi(), next.hi()));
    } else {
      merged.push_back(next);
    }
  }
  intervals_ = std::move(merged);
  normalized_ = true;
}

Interval IntervalUnion::hull() const {
  if (intervals_.empty()) throw Error(ErrorCode::InvalidArgument, "hull of an empty union");
  double lo = intervals_.front().lo();
  double hi = intervals_.front().hi();
  for (const Interval& iv : intervals_) {
    lo = std::min(lo, iv.lo());
    hi = std::max(hi, iv.hi());
  }
  return {lo, hi};
}

bool IntervalUnion::contains(double x, double tol) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.contains(x, tol); });
}

IntervalUnion IntervalUnion::shifted(double delta) const {
  IntervalUnion out;
  out.intervals_.reserve(intervals_.size());
  for (const Interval& iv : intervals_) out.intervals_.push_back(iv.shifted(delta));
  out.normalized_ = false;
  if (normalized_) out.normalize();
  return out;
}

}  // namespace eicp
