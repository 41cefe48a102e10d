#pragma once

#include <cstddef>
#include <vector>

namespace eicp {

/// Real polynomial with coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  /// c0 + c1 y
  static Polynomial linear(double c0, double c1) { return Polynomial({c0, c1}); }
  static Polynomial constant(double c) { return Polynomial({c}); }

  /// Degree after dropping exactly-zero leading coefficients; -1 for zero.
  int degree() const noexcept;
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  double operator()(double y) const noexcept;
  /// sum |c_k| |y|^k, the magnitude scale of an evaluation at y.
  double magnitude(double y) const noexcept;

  Polynomial derivative() const;
  /// 1 + max |c_k / c_deg|: every real root lies in [-bound, bound].
  double cauchy_bound() const;

  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;

  /// Real roots in [lo, hi], ascending. Sign changes between consecutive
  /// critical points are refined by bisection to `abs_tol`; critical points
  /// where the value vanishes to rounding are reported as even-multiplicity
  /// roots.
  std::vector<double> real_roots(double lo, double hi, double abs_tol = 1e-12) const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace eicp
