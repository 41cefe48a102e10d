// Random instance generators and independent reference computations shared by
// the test binaries. Oracles here deliberately avoid the library's algorithms.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "eicp/linalg.hpp"
#include "eicp/matrix.hpp"
#include "eicp/matrix_classes.hpp"

namespace testing_support {

using eicp::SymMatrix;
using eicp::Vector;

inline SymMatrix example1_a() {
  const double a[] = {14, 1, 1, 1, 11, -2, 1, -2, 13};
  return SymMatrix(3, a);
}

inline SymMatrix example1_b() {
  const double b[] = {6, 0, 0, 0, 10, 2, 0, 2, 10};
  return SymMatrix(3, b);
}

inline eicp::MatrixPair example1() { return eicp::MatrixPair(example1_a(), example1_b()); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_n(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, uniform(rng, lo, hi));
  return m;
}

/// Symmetric, strictly diagonally dominant, positive diagonal.
inline SymMatrix random_sdd(std::mt19937_64& rng, std::size_t n) {
  SymMatrix m = random_symmetric(rng, n);
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off += std::abs(m(i, j));
    m.set(i, i, off + uniform(rng, 0.1, 2.0));
  }
  return m;
}

/// Random symmetric matrix shifted by a multiple of the identity until it is
/// positive definite. Usually not diagonally dominant.
inline SymMatrix random_pd(std::mt19937_64& rng, std::size_t n) {
  SymMatrix m = random_symmetric(rng, n);
  const double lmin = eicp::sym_eig(m).values.front();
  const double shift = std::max(0.0, -lmin) + uniform(rng, 0.05, 1.0);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m(i, i) + shift);
  return m;
}

/// Pair with B SDD (positive diagonal) and A positive definite.
inline eicp::MatrixPair random_certified_pair(std::mt19937_64& rng, std::size_t n) {
  return eicp::MatrixPair(random_pd(rng, n), random_sdd(rng, n));
}

/// Eigenvalues of a symmetric 3x3 matrix from its characteristic polynomial,
/// solved with the trigonometric formula. Ascending.
inline std::array<double, 3> sym3_eigenvalues(const SymMatrix& m) {
  const double tr = m(0, 0) + m(1, 1) + m(2, 2);
  const double minors = m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1) + m(0, 0) * m(2, 2) - m(0, 2) * m(0, 2) +
                        m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2);
  const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2)) -
                     m(0, 1) * (m(0, 1) * m(2, 2) - m(1, 2) * m(0, 2)) +
                     m(0, 2) * (m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2));
  // lambda^3 - tr lambda^2 + minors lambda - det = 0; substitute lambda = t + tr/3.
  const double s = tr / 3.0;
  const double p = minors - tr * tr / 3.0;
  const double q = -2.0 * s * s * s + minors * s - det;
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  std::array<double, 3> out;
  for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(k)] = s + r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  std::sort(out.begin(), out.end());
  return out;
}

/// min x^T M x over simplex points with coordinates in multiples of 1/steps.
inline double grid_simplex_min(const SymMatrix& m, int steps) {
  const std::size_t n = m.size();
  std::vector<int> k(n, 0);
  double best = INFINITY;
  Vector x(n);
  // Enumerate compositions of `steps` into n nonnegative parts.
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx + 1 == n) {
      k[idx] = left;
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(k[i]) / steps;
      best = std::min(best, m.quadratic_form(x));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, steps);
  return best;
}

/// Direct check of the complementarity system with naive loops.
struct DirectCheck {
  double min_x;
  double min_w;
  double max_abs_product;
  double sum_x;
};

inline DirectCheck direct_check(const SymMatrix& a, const SymMatrix& b, const Vector& x, double lambda) {
  const std::size_t n = a.size();
  DirectCheck c{INFINITY, INFINITY, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double w = 0.0;
    for (std::size_t j = 0; j < n; ++j) w += (a(i, j) - lambda * b(i, j)) * x[j];
    c.min_x = std::min(c.min_x, x[i]);
    c.min_w = std::min(c.min_w, w);
    c.max_abs_product = std::max(c.max_abs_product, std::abs(x[i] * w));
    c.sum_x += x[i];
  }
  return c;
}

/// Random orthogonal matrix from Gram-Schmidt on a random Gaussian matrix,
/// stored column-wise as vectors.
inline std::vector<Vector> random_orthogonal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss;
  std::vector<Vector> q;
  while (q.size() < n) {
    Vector v(n);
    for (double& x : v) x = gauss(rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& u : q) {
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += u[i] * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= d * u[i];
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (double& x : v) x /= norm;
    q.push_back(std::move(v));
  }
  return q;
}

/// Q diag(d) Q^T.
inline SymMatrix from_spectrum(const std::vector<Vector>& q, const Vector& d) {
  const std::size_t n = d.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q[k][i] * d[k] * q[k][j];
      m.set(i, j, s);
    }
  return m;
}

inline double rel_err(double got, double want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

}  // namespace testing_support
