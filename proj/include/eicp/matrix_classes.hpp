#pragma once

#include <cstddef>
#include <optional>

#include "eicp/matrix.hpp"

namespace eicp {

inline constexpr std::size_t kDefaultMaxExactCopositiveN = 12;

enum class Copositivity { Copositive, NotCopositive, Unknown };

/// How a copositivity verdict was reached.
enum class CopositivityRoute { Nonnegative, PositiveDefinite, Exhaustive, None };

struct CopositivityVerdict {
  Copositivity status = Copositivity::Unknown;
  CopositivityRoute route = CopositivityRoute::None;
  /// x >= 0 with x^T M x < 0; present only for NotCopositive.
  std::optional<Vector> witness;

  bool copositive() const noexcept { return status == Copositivity::Copositive; }
  bool operator==(const CopositivityVerdict&) const = default;
};

struct ClassCertificate {
  bool is_sdd = false;
  bool is_dd = false;
  bool is_pd = false;
  CopositivityVerdict copositivity;

  bool operator==(const ClassCertificate&) const = default;
};

struct DominanceCheck {
  bool sdd = false;
  bool dd = false;
};

/// Strict and weak row diagonal dominance, compared exactly in doubles.
DominanceCheck check_dominance(const SymMatrix& m);
inline bool check_sdd(const SymMatrix& m) { return check_dominance(m).sdd; }

/// True iff cholesky succeeds.
bool check_pd(const SymMatrix& m);

/// Global minimiser of x^T M x over the unit simplex.
struct SimplexMinimum {
  double value = 0.0;
  Vector argmin;
};

/// Exhaustive support enumeration: every face's stationarity system
/// M_SS x = mu e, e^T x = 1 is solved and feasible points are compared.
/// Cost grows as 2^n; callers are expected to keep n small.
SimplexMinimum simplex_minimum(const SymMatrix& m);

/// Nonnegative and PD inputs are accepted without enumeration. Otherwise the
/// exhaustive route runs if n <= max_exact_n, and DimensionTooLarge is thrown
/// if it cannot.
CopositivityVerdict check_copositive(const SymMatrix& m,
                                     std::size_t max_exact_n = kDefaultMaxExactCopositiveN);

/// All class flags at once. A copositivity check that is too large to run is
/// recorded as Unknown instead of throwing.
ClassCertificate certify(const SymMatrix& m,
                         std::size_t max_exact_n = kDefaultMaxExactCopositiveN);

/// The pair (A, B) of an EiCP instance with cached certificates.
class MatrixPair {
 public:
  MatrixPair(SymMatrix a, SymMatrix b,
             std::size_t max_exact_n = kDefaultMaxExactCopositiveN);

  /// B = identity.
  static MatrixPair pareto(SymMatrix a,
                           std::size_t max_exact_n = kDefaultMaxExactCopositiveN);

  const SymMatrix& a() const noexcept { return a_; }
  const SymMatrix& b() const noexcept { return b_; }
  const ClassCertificate& cert_a() const noexcept { return cert_a_; }
  const ClassCertificate& cert_b() const noexcept { return cert_b_; }
  std::size_t size() const noexcept { return a_.size(); }
  std::size_t max_exact_n() const noexcept { return max_exact_n_; }

  /// 1 + ||A||_inf + ||B||_inf, the scale used by residual tolerances.
  double scale() const noexcept { return 1.0 + a_.norm_inf() + b_.norm_inf(); }

  bool operator==(const MatrixPair&) const = default;

 private:
  SymMatrix a_;
  SymMatrix b_;
  std::size_t max_exact_n_;
  ClassCertificate cert_a_;
  ClassCertificate cert_b_;
};

/// (A + mu B, B) with fresh certificates. Throws NegativeShift for mu < 0.
MatrixPair shift_pair(const MatrixPair& pair, double mu);

/// mu = max(0, -mu_min(A,B)) + 1e-6 (1 + |mu_min|), which makes A + mu B
/// positive definite.
double suggest_shift(const MatrixPair& pair);

}  // namespace eicp
