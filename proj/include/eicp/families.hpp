#pragma once

#include <cstddef>
#include <variant>

#include "eicp/interval.hpp"
#include "eicp/matrix_classes.hpp"

namespace eicp {

/// A = E + eps I, B = (n - 1 + eps) I - E.
struct AllOnesParams {
  std::size_t n = 0;
  double eps = 0.0;
  bool operator==(const AllOnesParams&) const = default;
};

/// B = beta I + rho (E - I) with rho = R / (n - 1), A = c B.
struct ProportionalParams {
  std::size_t n = 0;
  double beta = 0.0;
  double r = 0.0;
  double c = 0.0;
  bool operator==(const ProportionalParams&) const = default;
};

using FamilyParams = std::variant<AllOnesParams, ProportionalParams>;

/// A generated pair with its closed-form localization sets.
struct FamilyInstance {
  MatrixPair pair;
  Interval expected_hull_k1;
  Interval expected_hull_k2;
  Interval expected_gamma;
  FamilyParams params;
};

/// Needs n >= 2 and eps > 1, else ParamOutOfRange. K hulls are
/// [(1+eps)/(n-2+eps), (n+eps)/(eps-1)], Gamma is [eps/(n-1+eps), (n+eps)/(eps-1)].
FamilyInstance all_ones_family(std::size_t n, double eps);

/// Needs n >= 2, beta > R > 0 and c > 0, else ParamOutOfRange. K hulls are
/// [c beta/(beta+R), c (beta+R)/beta] and Gamma is the point c.
FamilyInstance proportional_family(std::size_t n, double beta, double r, double c);

struct CommutingRatios {
  bool matches = false;
  Vector ratios;       // alpha_k / beta_k along a shared eigenbasis, ascending
  Vector generalized;  // generalized_eig values, ascending
};

/// For commuting A and B (B PD), compares the generalized eigenvalues with
/// the ratios of eigenvalues along a common eigenbasis, obtained by
/// diagonalizing A inside each eigenspace of B. Values match within
/// 1e-7 (1 + |mu|). Throws NotCommuting when ||AB - BA||_inf exceeds
/// 1e-9 (1 + ||A||_inf ||B||_inf).
CommutingRatios commuting_ratio_check(const SymMatrix& a, const SymMatrix& b);

}  // namespace eicp
