#pragma once

#include <cstddef>
#include <vector>

#include "eicp/matrix.hpp"

namespace eicp {

/// Off-diagonal positive/negative row sums and the shifted diagonals
/// m_plus = m_ii + r_plus, m_minus = m_ii - r_minus.
struct RowStats {
  Vector r_plus;
  Vector r_minus;
  Vector m_plus;
  Vector m_minus;
};

RowStats row_stats(const SymMatrix& m);

/// Two-row quantities for one unordered pair of rows.
struct PairEntry {
  double a_plus = 0.0;   // a_ii a_jj - r_i^+(A) r_j^+(A)
  double a_minus = 0.0;  // a_ii a_jj - r_i^-(A) r_j^-(A)
  double b_plus = 0.0;   // same for B
  double b_minus = 0.0;
  double s_plus = 0.0;   // a_ii b_jj + a_jj b_ii + r_i^+(A) r_j^-(B) + r_j^+(A) r_i^-(B)
  double s_minus = 0.0;  // a_ii b_jj + a_jj b_ii + r_i^-(A) r_j^+(B) + r_j^-(A) r_i^+(B)
};

/// Packed storage over i < j; lookup is symmetric in (i, j).
class PairStats {
 public:
  PairStats(std::size_t n, std::vector<PairEntry> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return n_; }
  const PairEntry& operator()(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  std::vector<PairEntry> entries_;
};

/// Requires A.n == B.n >= 2.
PairStats pair_stats(const SymMatrix& a, const SymMatrix& b);

/// Single-pair evaluation shared by pair_stats and the quadratic builders.
PairEntry pair_entry(const SymMatrix& a, const RowStats& ra, const SymMatrix& b,
                     const RowStats& rb, std::size_t i, std::size_t j);

}  // namespace eicp
