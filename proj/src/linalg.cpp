#include "eicp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eicp/error.hpp"

namespace eicp {

DenseMatrix cholesky(const SymMatrix& m) {
  const std::size_t n = m.size();
  const double pivot_tol = 1e-12 * (1.0 + m.max_diagonal());
  DenseMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > pivot_tol)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "Cholesky pivot " + std::to_string(j + 1) + " is not positive");
    }
    const double d = std::sqrt(pivot);
    l(j, j) = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / d;
    }
  }
  return l;
}

namespace {

// Working copy of a symmetric matrix for in-place rotations.
struct JacobiState {
  std::size_t n;
  std::vector<double> a;
  DenseMatrix v;

  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

double off_diagonal_norm(JacobiState& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j) sum += s.at(i, j) * s.at(i, j);
  return std::sqrt(2.0 * sum);
}

// Annihilates a(p,q) with the Rutishauser form of the rotation.
void rotate(JacobiState& s, std::size_t p, std::size_t q) {
  const double apq = s.at(p, q);
  const double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double sn = t * c;
  const double tau = sn / (1.0 + c);

  s.at(p, p) -= t * apq;
  s.at(q, q) += t * apq;
  s.at(p, q) = 0.0;
  s.at(q, p) = 0.0;
  for (std::size_t r = 0; r < s.n; ++r) {
    if (r == p || r == q) continue;
    const double arp = s.at(r, p);
    const double arq = s.at(r, q);
    const double new_rp = arp - sn * (arq + tau * arp);
    const double new_rq = arq + sn * (arp - tau * arq);
    s.at(r, p) = s.at(p, r) = new_rp;
    s.at(r, q) = s.at(q, r) = new_rq;
  }
  for (std::size_t r = 0; r < s.n; ++r) {
    const double vrp = s.v(r, p);
    const double vrq = s.v(r, q);
    s.v(r, p) = vrp - sn * (vrq + tau * vrp);
    s.v(r, q) = vrq + sn * (vrp - tau * vrq);
  }
}

EigenDecomposition sorted(JacobiState& s) {
  std::vector<std::size_t> order(s.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return s.at(x, x) < s.at(y, y); });
  EigenDecomposition out{Vector(s.n), DenseMatrix(s.n, s.n)};
  for (std::size_t k = 0; k < s.n; ++k) {
    out.values[k] = s.at(order[k], order[k]);
    for (std::size_t r = 0; r < s.n; ++r) out.vectors(r, k) = s.v(r, order[k]);
  }
  return out;
}

}  // namespace

EigenDecomposition sym_eig(const SymMatrix& m, int max_sweeps) {
  const std::size_t n = m.size();
  JacobiState s{n, Vector(m.data().begin(), m.data().end()), DenseMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) s.v(i, i) = 1.0;

  double frob = 0.0;
  for (double x : m.data()) frob += x * x;
  frob = std::sqrt(frob);
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(s);
    if (off == 0.0 || off <= 1e-2 * eps * frob) return sorted(s);
    // Threshold sweeps: the first few skip small entries.
    const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = s.at(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(s.at(p, p)) + g == std::abs(s.at(p, p)) &&
            std::abs(s.at(q, q)) + g == std::abs(s.at(q, q))) {
          s.at(p, q) = s.at(q, p) = 0.0;
        } else if (std::abs(apq) > threshold && apq != 0.0) {
          rotate(s, p, q);
        }
      }
    }
  }
  throw Error(ErrorCode::NonConvergence,
              "Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
}

Vector forward_substitute(const DenseMatrix& lower, std::span<const double> rhs) {
  const std::size_t n = lower.rows();
  Vector y(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) y[i] -= lower(i, k) * y[k];
    y[i] /= lower(i, i);
  }
  return y;
}

Vector back_substitute_transposed(const DenseMatrix& lower, std::span<const double> rhs) {
  const std::size_t n = lower.rows();
  Vector x(rhs.begin(), rhs.end());
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= lower(k, ii) * x[k];
    x[ii] /= lower(ii, ii);
  }
  return x;
}

std::optional<Vector> solve_linear(DenseMatrix m, Vector rhs, double rel_tol) {
  const std::size_t n = m.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
  if (scale == 0.0) return std::nullopt;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) <= rel_tol * scale) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) rhs[ii] -= m(ii, j) * rhs[j];
    rhs[ii] /= m(ii, ii);
  }
  return rhs;
}

EigenDecomposition generalized_eig(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "A and B sizes differ");
  const DenseMatrix l = cholesky(b);

  // W = L^-1 A, column by column, then C = L^-1 W^T = L^-1 A L^-T.
  DenseMatrix w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = a(i, j);
    const Vector y = forward_substitute(l, col);
    for (std::size_t i = 0; i < n; ++i) w(i, j) = y[i];
  }
  Vector c_full(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = w(j, i);
    const Vector y = forward_substitute(l, col);
    for (std::size_t i = 0; i < n; ++i) c_full[i * n + j] = y[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c_full[i * n + j] = c_full[j * n + i] = 0.5 * (c_full[i * n + j] + c_full[j * n + i]);

  EigenDecomposition reduced = sym_eig(SymMatrix(n, c_full));
  EigenDecomposition out{reduced.values, DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const Vector x = back_substitute_transposed(l, reduced.vector(k));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = x[i];
  }
  return out;
}

}  // namespace eicp
