#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eicp/interval.hpp"
#include "eicp/matrix_classes.hpp"

namespace eicp {

/// a2 y^2 - a1 y + a0. a1 is stored with the sign of the s-quantities.
struct QuadraticPoly {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  double operator()(double y) const noexcept { return (a2 * y - a1) * y + a0; }
  double discriminant() const noexcept { return a1 * a1 - 4.0 * a2 * a0; }
  double vertex() const noexcept { return a1 / (2.0 * a2); }
};

struct QuadRoots {
  double lo = 0.0;
  double hi = 0.0;
};

/// Real roots of a strictly convex quadratic. Discriminants in
/// [-1e-9 (1 + a1^2), 0) are clamped to zero; below that NegativeDiscriminant
/// is thrown.
QuadRoots quad_roots(const QuadraticPoly& p);

/// The two-row quadratics for rows (i, j).
struct PairQuadratics {
  QuadraticPoly low;  // b_ij^+ y^2 - s_ij^- y + a_ij^-
  QuadraticPoly up;   // b_ij^- y^2 - s_ij^+ y + a_ij^+
};

/// Requires the two-row hypotheses. The coefficient form is cross-checked
/// against the product form at sample points before returning.
PairQuadratics build_quadratics(const MatrixPair& pair, std::size_t i, std::size_t j);

/// Product forms (y b_ii - a_ii)(y b_jj - a_jj) - U_i U_j and - L_i L_j with
/// U = r^+(A) + y r^-(B), L = r^-(A) + y r^+(B). No hypotheses required.
double factored_up(const MatrixPair& pair, std::size_t i, std::size_t j, double y);
double factored_low(const MatrixPair& pair, std::size_t i, std::size_t j, double y);

/// Hypotheses certified on a pair.
struct Assumptions {
  bool b_sdd = false;
  bool b_pd = false;
  bool a_copositive = false;

  bool one_row() const noexcept { return b_sdd && b_pd; }
  bool two_row() const noexcept { return one_row() && a_copositive; }
  bool operator==(const Assumptions&) const = default;
};

Assumptions assumptions_of(const MatrixPair& pair);

/// A member interval tagged with the row (j == i) or row pair it came from.
struct IndexedInterval {
  Interval interval;
  std::size_t i = 0;
  std::size_t j = 0;

  bool operator==(const IndexedInterval&) const = default;
};

/// Raw per-index intervals plus their normalized union.
struct LocalizationSet {
  std::vector<IndexedInterval> raw;
  IntervalUnion set;

  Interval hull() const { return set.hull(); }
  LocalizationSet shifted(double delta) const;
  bool operator==(const LocalizationSet&) const = default;
};

/// One-row set. Needs B SDD and PD.
LocalizationSet k1_set(const MatrixPair& pair);
/// One-row set refined by copositivity of A.
LocalizationSet k1_cop_set(const MatrixPair& pair);
/// Two-row set over unordered pairs i < j. Needs B SDD and PD, A copositive.
LocalizationSet k2_set(const MatrixPair& pair);

struct VertexCaps {
  double y_star_up = 0.0;
  double y_star_low = 0.0;
  double c_up = 0.0;
  double c_low = 0.0;
};

VertexCaps pair_vertex_and_caps(const MatrixPair& pair, std::size_t i, std::size_t j);

/// Closed-form extreme endpoints of K1, evaluated without building the set.
Interval hull_bounds_k1(const MatrixPair& pair);
/// Closed-form extreme roots over all pairs, lower end clamped at zero.
Interval hull_bounds_k2(const MatrixPair& pair);
/// [mu_min, mu_max] of the generalized spectrum. Needs B PD only.
Interval gamma_interval(const MatrixPair& pair);

/// Multi-row polynomials over a row subset S. Beyond |S| = 2 these do not
/// give a valid enclosure; they are exposed for exploration.
struct MultiRowValues {
  double low = 0.0;
  double up = 0.0;
};
MultiRowValues multi_row_polys(const MatrixPair& pair, std::span<const std::size_t> rows,
                               double y);

struct MultiRowRoots {
  double low_min = 0.0;  // smallest real root of the lower polynomial
  double up_max = 0.0;   // largest real root of the upper polynomial
};
/// Throws NoRealRoot when either polynomial has no real root in the bracket.
MultiRowRoots multi_row_roots(const MatrixPair& pair, std::span<const std::size_t> rows);

/// Every set whose hypotheses are certified on the pair.
struct LocalizationReport {
  LocalizationSet k1;
  std::optional<LocalizationSet> k1_cop;
  std::optional<LocalizationSet> k2;
  Interval gamma;
  Interval hull_k1;
  std::optional<Interval> hull_k2;
  Assumptions assumptions;
};

/// Throws HypothesisViolation when even K1 is unavailable (B not SDD or PD).
LocalizationReport localize(const MatrixPair& pair);

}  // namespace eicp
