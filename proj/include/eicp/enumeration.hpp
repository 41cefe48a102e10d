#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eicp/matrix_classes.hpp"

namespace eicp {

/// One complementarity eigenpair, normalized so that sum(x) == 1.
struct EicpSolution {
  double lambda = 0.0;
  Vector x;
  std::vector<std::size_t> support;  // ascending, 0-based
  Vector w;                          // (A - lambda B) x

  bool operator==(const EicpSolution&) const = default;
};

struct Spectrum {
  std::vector<EicpSolution> solutions;  // sorted by lambda, then support
  Vector values;                        // deduplicated, ascending
  /// Supports whose subproblem had a repeated generalized eigenvalue; only
  /// the solver's basis vectors were tested there.
  std::vector<std::vector<std::size_t>> degenerate_supports;

  bool operator==(const Spectrum&) const = default;
};

struct EnumerationOptions {
  std::size_t n_max = 15;
  double support_tol = 1e-9;
  /// Defaults to 1e-8 (1 + ||A||_inf + ||B||_inf) when unset.
  std::optional<double> feas_tol;
  double sign_tol = 1e-9;
  double dedup_rel_tol = 1e-7;
};

/// Feasibility tolerance actually used for a pair.
double effective_feas_tol(const MatrixPair& pair, const EnumerationOptions& opts);

enum class EicpCondition {
  None,
  DualFeasibility,   // (A - lambda B) x >= 0
  PrimalFeasibility, // x >= 0
  Complementarity,   // x^T (A - lambda B) x = 0
  Normalization,     // e^T x = 1
};

const char* condition_name(EicpCondition c) noexcept;

struct VerifyResult {
  bool ok = false;
  EicpCondition failed = EicpCondition::None;  // first failing condition
  std::size_t index = 0;                       // offending row, where meaningful
  Vector w;
};

/// Checks the EiCP system at (x, lambda). Complementarity uses the tolerance
/// feas_tol * (1 + ||A||_inf + ||B||_inf), both for x^T w and for each x_i w_i.
VerifyResult verify_solution(const MatrixPair& pair, std::span<const double> x, double lambda,
                             double feas_tol);

/// Exhaustive support scan over all nonempty principal subproblems.
/// Needs B positive definite and n <= opts.n_max.
Spectrum enumerate_spectrum(const MatrixPair& pair, const EnumerationOptions& opts = {});

/// Generalized Rayleigh quotient x^T A x / x^T B x.
double rayleigh_quotient(const MatrixPair& pair, std::span<const double> x);

}  // namespace eicp
