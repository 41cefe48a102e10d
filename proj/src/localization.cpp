#include "eicp/localization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "eicp/error.hpp"
#include "eicp/linalg.hpp"
#include "eicp/polynomial.hpp"
#include "eicp/row_stats.hpp"

namespace eicp {

namespace {

void require_one_row(const MatrixPair& pair, const char* set_name) {
  if (!pair.cert_b().is_pd) {
    throw Error(ErrorCode::HypothesisViolation,
                std::string(set_name) + " requires B positive definite");
  }
  if (!pair.cert_b().is_sdd) {
    throw Error(ErrorCode::HypothesisViolation,
                std::string(set_name) + " requires B strictly diagonally dominant");
  }
}

void require_two_row(const MatrixPair& pair, const char* set_name) {
  require_one_row(pair, set_name);
  if (!pair.cert_a().copositivity.copositive()) {
    const bool unknown = pair.cert_a().copositivity.status == Copositivity::Unknown;
    throw Error(ErrorCode::HypothesisViolation,
                std::string(set_name) + " requires A copositive" +
                    (unknown ? " (copositivity could not be certified at this size)"
                             : " (A is not copositive; consider a shift)"));
  }
}

void check_rows(const MatrixPair& pair, std::size_t i, std::size_t j) {
  if (i == j || i >= pair.size() || j >= pair.size()) {
    throw Error(ErrorCode::InvalidArgument, "rows must be distinct and in range");
  }
}

double disc_tol(double a1) { return 1e-9 * (1.0 + a1 * a1); }

double clamped_sqrt_disc(double disc, double a1) {
  if (disc < -disc_tol(a1)) {
    throw Error(ErrorCode::NegativeDiscriminant,
                "quadratic discriminant " + std::to_string(disc) + " is negative");
  }
  return std::sqrt(std::max(disc, 0.0));
}

// A discriminant within the rounding error of its own evaluation (and of the
// coefficients feeding it) cannot be told apart from zero. Snapping it keeps
// double roots, such as perfect-square quadratics, accurate to O(u) rather
// than O(sqrt(u)).
double root_disc(const QuadraticPoly& p) {
  const double disc = p.discriminant();
  const double noise = 16.0 * std::numeric_limits<double>::epsilon() *
                       (p.a1 * p.a1 + 4.0 * std::abs(p.a2 * p.a0));
  return std::abs(disc) <= noise ? 0.0 : disc;
}

// Lower endpoint above the upper one can only come from rounding when the
// hypotheses hold, since both quadratics are nonpositive at a_ii / b_ii.
Interval ordered(double lo, double hi) {
  if (lo > hi) {
    if (lo - hi > 1e-9 * (1.0 + std::abs(hi))) {
      throw Error(ErrorCode::InternalError, "two-row interval endpoints are inverted");
    }
    lo = hi;
  }
  return {lo, hi};
}

}  // namespace

QuadRoots quad_roots(const QuadraticPoly& p) {
  if (!(p.a2 > 0.0)) {
    throw Error(ErrorCode::HypothesisViolation, "quadratic is not strictly convex");
  }
  const double sq = clamped_sqrt_disc(root_disc(p), p.a1);
  // Larger-magnitude root first, the other from the product of roots.
  const double q = 0.5 * (p.a1 + std::copysign(sq, p.a1));
  if (q == 0.0) return {0.0, 0.0};
  const double r1 = q / p.a2;
  const double r2 = p.a0 / q;
  return {std::min(r1, r2), std::max(r1, r2)};
}

double factored_up(const MatrixPair& pair, std::size_t i, std::size_t j, double y) {
  const SymMatrix& a = pair.a();
  const SymMatrix& b = pair.b();
  const RowStats ra = row_stats(a);
  const RowStats rb = row_stats(b);
  const double x = (y * b(i, i) - a(i, i)) * (y * b(j, j) - a(j, j));
  return x - (ra.r_plus[i] + y * rb.r_minus[i]) * (ra.r_plus[j] + y * rb.r_minus[j]);
}

double factored_low(const MatrixPair& pair, std::size_t i, std::size_t j, double y) {
  const SymMatrix& a = pair.a();
  const SymMatrix& b = pair.b();
  const RowStats ra = row_stats(a);
  const RowStats rb = row_stats(b);
  const double x = (y * b(i, i) - a(i, i)) * (y * b(j, j) - a(j, j));
  return x - (ra.r_minus[i] + y * rb.r_plus[i]) * (ra.r_minus[j] + y * rb.r_plus[j]);
}

namespace {

PairQuadratics quadratics_from(const PairEntry& e) {
  return {QuadraticPoly{e.b_plus, e.s_minus, e.a_minus},
          QuadraticPoly{e.b_minus, e.s_plus, e.a_plus}};
}

}  // namespace

PairQuadratics build_quadratics(const MatrixPair& pair, std::size_t i, std::size_t j) {
  check_rows(pair, i, j);
  require_two_row(pair, "the two-row quadratics");
  const RowStats ra = row_stats(pair.a());
  const RowStats rb = row_stats(pair.b());
  const PairQuadratics q = quadratics_from(pair_entry(pair.a(), ra, pair.b(), rb, i, j));

  const SymMatrix& a = pair.a();
  const SymMatrix& b = pair.b();
  const std::array<double, 5> samples{-1.0, 0.0, 1.0, a(i, i) / b(i, i), a(j, j) / b(j, j)};
  for (double y : samples) {
    const double xi = y * b(i, i) - a(i, i);
    const double xj = y * b(j, j) - a(j, j);
    const double ui = ra.r_plus[i] + y * rb.r_minus[i];
    const double uj = ra.r_plus[j] + y * rb.r_minus[j];
    const double li = ra.r_minus[i] + y * rb.r_plus[i];
    const double lj = ra.r_minus[j] + y * rb.r_plus[j];
    const double up = xi * xj - ui * uj;
    const double low = xi * xj - li * lj;
    const double scale_up = 1.0 + std::abs(xi * xj) + std::abs(ui * uj);
    const double scale_low = 1.0 + std::abs(xi * xj) + std::abs(li * lj);
    if (std::abs(q.up(y) - up) > 1e-9 * scale_up || std::abs(q.low(y) - low) > 1e-9 * scale_low) {
      throw Error(ErrorCode::InternalError, "coefficient and product forms disagree");
    }
  }
  return q;
}

Assumptions assumptions_of(const MatrixPair& pair) {
  return {pair.cert_b().is_sdd, pair.cert_b().is_pd, pair.cert_a().copositivity.copositive()};
}

LocalizationSet LocalizationSet::shifted(double delta) const {
  LocalizationSet out{{}, set.shifted(delta)};
  out.raw.reserve(raw.size());
  for (const IndexedInterval& r : raw) out.raw.push_back({r.interval.shifted(delta), r.i, r.j});
  return out;
}

namespace {

LocalizationSet finish(std::vector<IndexedInterval> raw) {
  std::vector<Interval> members;
  members.reserve(raw.size());
  for (const IndexedInterval& r : raw) members.push_back(r.interval);
  return {std::move(raw), IntervalUnion(std::move(members))};
}

}  // namespace

LocalizationSet k1_set(const MatrixPair& pair) {
  require_one_row(pair, "K1");
  const RowStats ra = row_stats(pair.a());
  const RowStats rb = row_stats(pair.b());
  std::vector<IndexedInterval> raw;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const double lo = std::min(ra.m_minus[i] / rb.m_minus[i], ra.m_minus[i] / rb.m_plus[i]);
    const double hi = std::max(ra.m_plus[i] / rb.m_minus[i], ra.m_plus[i] / rb.m_plus[i]);
    raw.push_back({Interval(lo, hi), i, i});
  }
  return finish(std::move(raw));
}

LocalizationSet k1_cop_set(const MatrixPair& pair) {
  require_two_row(pair, "K1'");
  const RowStats ra = row_stats(pair.a());
  const RowStats rb = row_stats(pair.b());
  std::vector<IndexedInterval> raw;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const double lo = std::max(0.0, ra.m_minus[i] / rb.m_plus[i]);
    const double hi = ra.m_plus[i] / rb.m_minus[i];
    raw.push_back({ordered(lo, hi), i, i});
  }
  return finish(std::move(raw));
}

LocalizationSet k2_set(const MatrixPair& pair) {
  require_two_row(pair, "K2");
  const std::size_t n = pair.size();
  std::vector<IndexedInterval> raw;
  if (n == 1) {
    // No row pairs: the single complementarity eigenvalue is a_11 / b_11.
    const double v = pair.a()(0, 0) / pair.b()(0, 0);
    raw.push_back({Interval(std::max(0.0, v), std::max(0.0, v)), 0, 0});
    return finish(std::move(raw));
  }
  const PairStats stats = pair_stats(pair.a(), pair.b());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairQuadratics q = quadratics_from(stats(i, j));
      const double lo = std::max(0.0, quad_roots(q.low).lo);
      const double hi = quad_roots(q.up).hi;
      raw.push_back({ordered(lo, hi), i, j});
    }
  }
  return finish(std::move(raw));
}

VertexCaps pair_vertex_and_caps(const MatrixPair& pair, std::size_t i, std::size_t j) {
  check_rows(pair, i, j);
  require_two_row(pair, "the vertex/cap comparison");
  const RowStats ra = row_stats(pair.a());
  const RowStats rb = row_stats(pair.b());
  const PairEntry e = pair_entry(pair.a(), ra, pair.b(), rb, i, j);
  VertexCaps out;
  out.y_star_up = e.s_plus / (2.0 * e.b_minus);
  out.y_star_low = e.s_minus / (2.0 * e.b_plus);
  out.c_up = std::max(ra.m_plus[i] / rb.m_minus[i], ra.m_plus[j] / rb.m_minus[j]);
  out.c_low = std::min(ra.m_minus[i] / rb.m_plus[i], ra.m_minus[j] / rb.m_plus[j]);
  return out;
}

Interval hull_bounds_k1(const MatrixPair& pair) {
  require_one_row(pair, "K1");
  const RowStats ra = row_stats(pair.a());
  const RowStats rb = row_stats(pair.b());
  double lo_minus = ra.m_minus[0] / rb.m_minus[0];
  double lo_plus = ra.m_minus[0] / rb.m_plus[0];
  double hi_minus = ra.m_plus[0] / rb.m_minus[0];
  double hi_plus = ra.m_plus[0] / rb.m_plus[0];
  for (std::size_t i = 1; i < pair.size(); ++i) {
    lo_minus = std::min(lo_minus, ra.m_minus[i] / rb.m_minus[i]);
    lo_plus = std::min(lo_plus, ra.m_minus[i] / rb.m_plus[i]);
    hi_minus = std::max(hi_minus, ra.m_plus[i] / rb.m_minus[i]);
    hi_plus = std::max(hi_plus, ra.m_plus[i] / rb.m_plus[i]);
  }
  return {std::min(lo_minus, lo_plus), std::max(hi_minus, hi_plus)};
}

Interval hull_bounds_k2(const MatrixPair& pair) {
  require_two_row(pair, "K2");
  const std::size_t n = pair.size();
  if (n == 1) return k2_set(pair).hull();
  const PairStats stats = pair_stats(pair.a(), pair.b());
  double lower = std::numeric_limits<double>::infinity();
  double upper = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairEntry& e = stats(i, j);
      const double d_low = root_disc({e.b_plus, e.s_minus, e.a_minus});
      const double d_up = root_disc({e.b_minus, e.s_plus, e.a_plus});
      lower = std::min(lower, (e.s_minus - clamped_sqrt_disc(d_low, e.s_minus)) / (2.0 * e.b_plus));
      upper = std::max(upper, (e.s_plus + clamped_sqrt_disc(d_up, e.s_plus)) / (2.0 * e.b_minus));
    }
  }
  return ordered(std::max(0.0, lower), upper);
}

Interval gamma_interval(const MatrixPair& pair) {
  const EigenDecomposition eig = generalized_eig(pair.a(), pair.b());
  return {eig.values.front(), eig.values.back()};
}

namespace {

void check_subset(const MatrixPair& pair, std::span<const std::size_t> rows) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "row subset must be nonempty");
  std::vector<bool> seen(pair.size(), false);
  for (std::size_t r : rows) {
    if (r >= pair.size() || seen[r]) {
      throw Error(ErrorCode::InvalidArgument, "row subset must hold distinct in-range rows");
    }
    seen[r] = true;
  }
}

}  // namespace

MultiRowValues multi_row_polys(const MatrixPair& pair, std::span<const std::size_t> rows,
                               double y) {
  check_subset(pair, rows);
  require_two_row(pair, "the multi-row polynomials");
  const SymMatrix& a = pair.a();
  const SymMatrix& b = pair.b();
  const RowStats ra = row_stats(a);
  const RowStats rb = row_stats(b);
  double x_up = 1.0, u = 1.0, x_low = 1.0, l = 1.0;
  for (std::size_t i : rows) {
    x_up *= b(i, i) * y - a(i, i);
    x_low *= a(i, i) - b(i, i) * y;
    u *= ra.r_plus[i] + y * rb.r_minus[i];
    l *= ra.r_minus[i] + y * rb.r_plus[i];
  }
  return {x_low - l, x_up - u};
}

MultiRowRoots multi_row_roots(const MatrixPair& pair, std::span<const std::size_t> rows) {
  check_subset(pair, rows);
  require_two_row(pair, "the multi-row polynomials");
  const SymMatrix& a = pair.a();
  const SymMatrix& b = pair.b();
  const RowStats ra = row_stats(a);
  const RowStats rb = row_stats(b);

  Polynomial x_up = Polynomial::constant(1.0), u = Polynomial::constant(1.0);
  Polynomial x_low = Polynomial::constant(1.0), l = Polynomial::constant(1.0);
  for (std::size_t i : rows) {
    x_up = x_up * Polynomial::linear(-a(i, i), b(i, i));
    x_low = x_low * Polynomial::linear(a(i, i), -b(i, i));
    u = u * Polynomial::linear(ra.r_plus[i], rb.r_minus[i]);
    l = l * Polynomial::linear(ra.r_minus[i], rb.r_plus[i]);
  }
  const Polynomial p_up = x_up - u;
  const Polynomial p_low = x_low - l;

  const Interval k1 = hull_bounds_k1(pair);
  const double base = 1.0 + 10.0 * std::max(std::abs(k1.lo()), std::abs(k1.hi()));

  const double m_low = std::max(base, p_low.cauchy_bound());
  const std::vector<double> low_roots = p_low.real_roots(-m_low, m_low);
  const double m_up = std::max(base, p_up.cauchy_bound());
  const std::vector<double> up_roots = p_up.real_roots(-m_up, m_up);
  if (low_roots.empty()) throw Error(ErrorCode::NoRealRoot, "lower multi-row polynomial has no real root");
  if (up_roots.empty()) throw Error(ErrorCode::NoRealRoot, "upper multi-row polynomial has no real root");
  return {low_roots.front(), up_roots.back()};
}

LocalizationReport localize(const MatrixPair& pair) {
  LocalizationReport r{k1_set(pair), {}, {}, gamma_interval(pair), hull_bounds_k1(pair), {},
                       assumptions_of(pair)};
  if (r.assumptions.two_row()) {
    r.k1_cop = k1_cop_set(pair);
    r.k2 = k2_set(pair);
    r.hull_k2 = hull_bounds_k2(pair);
  }
  return r;
}

}  // namespace eicp
