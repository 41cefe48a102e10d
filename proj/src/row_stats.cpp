#include "eicp/row_stats.hpp"

#include <algorithm>
#include <utility>

#include "eicp/error.hpp"

namespace eicp {

RowStats row_stats(const SymMatrix& m) {
  const std::size_t n = m.size();
  RowStats s{Vector(n, 0.0), Vector(n, 0.0), Vector(n), Vector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      s.r_plus[i] += std::max(m(i, j), 0.0);
      s.r_minus[i] -= std::min(m(i, j), 0.0);
    }
    s.m_plus[i] = m(i, i) + s.r_plus[i];
    s.m_minus[i] = m(i, i) - s.r_minus[i];
  }
  return s;
}

const PairEntry& PairStats::operator()(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) throw Error(ErrorCode::InvalidArgument, "invalid row pair");
  if (i > j) std::swap(i, j);
  // Row-major offset of (i, j) in the strict upper triangle.
  const std::size_t offset = i * n_ - i * (i + 1) / 2 + (j - i - 1);
  return entries_[offset];
}

PairEntry pair_entry(const SymMatrix& a, const RowStats& ra, const SymMatrix& b,
                     const RowStats& rb, std::size_t i, std::size_t j) {
  PairEntry e;
  e.a_plus = a(i, i) * a(j, j) - ra.r_plus[i] * ra.r_plus[j];
  e.a_minus = a(i, i) * a(j, j) - ra.r_minus[i] * ra.r_minus[j];
  e.b_plus = b(i, i) * b(j, j) - rb.r_plus[i] * rb.r_plus[j];
  e.b_minus = b(i, i) * b(j, j) - rb.r_minus[i] * rb.r_minus[j];
  const double cross = a(i, i) * b(j, j) + a(j, j) * b(i, i);
  e.s_plus = cross + ra.r_plus[i] * rb.r_minus[j] + ra.r_plus[j] * rb.r_minus[i];
  e.s_minus = cross + ra.r_minus[i] * rb.r_plus[j] + ra.r_minus[j] * rb.r_plus[i];
  return e;
}

PairStats pair_stats(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "A and B sizes differ");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "pair statistics need n >= 2");
  const RowStats ra = row_stats(a);
  const RowStats rb = row_stats(b);
  std::vector<PairEntry> entries;
  entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back(pair_entry(a, ra, b, rb, i, j));
  return PairStats(n, std::move(entries));
}

}  // namespace eicp
