#include "eicp/matrix_classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eicp/error.hpp"
#include "eicp/linalg.hpp"

namespace eicp {

DominanceCheck check_dominance(const SymMatrix& m) {
  DominanceCheck out{true, true};
  for (std::size_t i = 0; i < m.size(); ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) off += std::abs(m(i, j));
    const double d = std::abs(m(i, i));
    if (!(d > off)) out.sdd = false;
    if (!(d >= off)) out.dd = false;
  }
  return out;
}

bool check_pd(const SymMatrix& m) {
  try {
    cholesky(m);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositiveDefinite) return false;
    throw;
  }
}

namespace {

constexpr double kSimplexFeasTol = 1e-9;

bool all_nonnegative(const SymMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](double v) { return v >= 0.0; });
}

}  // namespace

SimplexMinimum simplex_minimum(const SymMatrix& m) {
  const std::size_t n = m.size();
  if (n >= 8 * sizeof(unsigned long long) - 1) {
    throw Error(ErrorCode::DimensionTooLarge, "support enumeration needs n < 63");
  }
  SimplexMinimum best{std::numeric_limits<double>::infinity(), Vector(n, 0.0)};

  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) < best.value) {
      best.value = m(i, i);
      std::fill(best.argmin.begin(), best.argmin.end(), 0.0);
      best.argmin[i] = 1.0;
    }
  }

  const unsigned long long count = 1ULL << n;
  std::vector<std::size_t> idx;
  for (unsigned long long mask = 1; mask < count; ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) idx.push_back(i);
    const std::size_t k = idx.size();
    if (k < 2) continue;

    DenseMatrix kkt(k + 1, k + 1);
    Vector rhs(k + 1, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) kkt(r, c) = m(idx[r], idx[c]);
      kkt(r, k) = -1.0;
      kkt(k, r) = 1.0;
    }
    rhs[k] = 1.0;
    // A singular system means q is constant along a direction inside the
    // face, so its minimum is also attained on a smaller face.
    const auto sol = solve_linear(std::move(kkt), std::move(rhs));
    if (!sol) continue;

    Vector x(n, 0.0);
    double total = 0.0;
    bool feasible = true;
    for (std::size_t r = 0; r < k; ++r) {
      const double v = (*sol)[r];
      if (v < -kSimplexFeasTol) {
        feasible = false;
        break;
      }
      x[idx[r]] = std::max(v, 0.0);
      total += x[idx[r]];
    }
    if (!feasible || total <= 0.0) continue;
    for (double& v : x) v /= total;
    const double value = m.quadratic_form(x);
    if (value < best.value) {
      best.value = value;
      best.argmin = std::move(x);
    }
  }
  return best;
}

CopositivityVerdict check_copositive(const SymMatrix& m, std::size_t max_exact_n) {
  if (all_nonnegative(m)) return {Copositivity::Copositive, CopositivityRoute::Nonnegative, {}};
  if (check_pd(m)) return {Copositivity::Copositive, CopositivityRoute::PositiveDefinite, {}};
  if (m.size() > max_exact_n) {
    throw Error(ErrorCode::DimensionTooLarge,
                "copositivity of a " + std::to_string(m.size()) +
                    "x" + std::to_string(m.size()) + " matrix needs exhaustive search beyond n = " +
                    std::to_string(max_exact_n));
  }
  const double cop_tol = 1e-10 * (1.0 + m.norm_inf());
  SimplexMinimum mn = simplex_minimum(m);
  if (mn.value >= -cop_tol) return {Copositivity::Copositive, CopositivityRoute::Exhaustive, {}};
  return {Copositivity::NotCopositive, CopositivityRoute::Exhaustive, std::move(mn.argmin)};
}

ClassCertificate certify(const SymMatrix& m, std::size_t max_exact_n) {
  ClassCertificate cert;
  const DominanceCheck dom = check_dominance(m);
  cert.is_sdd = dom.sdd;
  cert.is_dd = dom.dd;
  cert.is_pd = check_pd(m);
  if (all_nonnegative(m)) {
    cert.copositivity = {Copositivity::Copositive, CopositivityRoute::Nonnegative, {}};
  } else if (cert.is_pd) {
    cert.copositivity = {Copositivity::Copositive, CopositivityRoute::PositiveDefinite, {}};
  } else {
    try {
      cert.copositivity = check_copositive(m, max_exact_n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DimensionTooLarge) throw;
      cert.copositivity = {Copositivity::Unknown, CopositivityRoute::None, {}};
    }
  }
  return cert;
}

MatrixPair::MatrixPair(SymMatrix a, SymMatrix b, std::size_t max_exact_n)
    : a_(std::move(a)), b_(std::move(b)), max_exact_n_(max_exact_n) {
  if (a_.size() != b_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "A is " + std::to_string(a_.size()) +
                                                  "x" + std::to_string(a_.size()) + " but B is " +
                                                  std::to_string(b_.size()) + "x" +
                                                  std::to_string(b_.size()));
  }
  cert_a_ = certify(a_, max_exact_n_);
  cert_b_ = certify(b_, max_exact_n_);
}

MatrixPair MatrixPair::pareto(SymMatrix a, std::size_t max_exact_n) {
  const std::size_t n = a.size();
  return MatrixPair(std::move(a), SymMatrix::identity(n), max_exact_n);
}

MatrixPair shift_pair(const MatrixPair& pair, double mu) {
  if (!(mu >= 0.0)) throw Error(ErrorCode::NegativeShift, "shift must be nonnegative");
  if (mu == 0.0) return pair;
  return MatrixPair(pair.a() + mu * pair.b(), pair.b(), pair.max_exact_n());
}

double suggest_shift(const MatrixPair& pair) {
  const EigenDecomposition eig = generalized_eig(pair.a(), pair.b());
  const double mu_min = eig.values.front();
  return std::max(0.0, -mu_min) + 1e-6 * (1.0 + std::abs(mu_min));
}

}  // namespace eicp
