#include "eicp/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eicp/error.hpp"
#include "eicp/linalg.hpp"

namespace eicp {

const char* condition_name(EicpCondition c) noexcept {
  switch (c) {
    case EicpCondition::None: return "none";
    case EicpCondition::DualFeasibility: return "dual feasibility (A - lambda B) x >= 0";
    case EicpCondition::PrimalFeasibility: return "primal feasibility x >= 0";
    case EicpCondition::Complementarity: return "complementarity x^T w = 0";
    case EicpCondition::Normalization: return "normalization e^T x = 1";
  }
  return "unknown";
}

double effective_feas_tol(const MatrixPair& pair, const EnumerationOptions& opts) {
  return opts.feas_tol.value_or(1e-8 * pair.scale());
}

namespace {

Vector residual(const MatrixPair& pair, std::span<const double> x, double lambda) {
  Vector w = pair.a().multiply(x);
  const Vector bx = pair.b().multiply(x);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= lambda * bx[i];
  return w;
}

}  // namespace

VerifyResult verify_solution(const MatrixPair& pair, std::span<const double> x, double lambda,
                             double feas_tol) {
  if (x.size() != pair.size()) throw Error(ErrorCode::DimensionMismatch, "x has the wrong size");
  VerifyResult r;
  r.w = residual(pair, x, lambda);
  auto fail = [&](EicpCondition c, std::size_t i) {
    r.ok = false;
    r.failed = c;
    r.index = i;
    return r;
  };
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    if (r.w[i] < -feas_tol) return fail(EicpCondition::DualFeasibility, i);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] < -feas_tol) return fail(EicpCondition::PrimalFeasibility, i);
  const double comp_tol = feas_tol * pair.scale();
  if (std::abs(dot(x, r.w)) > comp_tol) return fail(EicpCondition::Complementarity, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(x[i] * r.w[i]) > comp_tol) return fail(EicpCondition::Complementarity, i);
  double total = 0.0;
  for (double v : x) total += v;
  if (std::abs(total - 1.0) > feas_tol) return fail(EicpCondition::Normalization, 0);
  r.ok = true;
  return r;
}

double rayleigh_quotient(const MatrixPair& pair, std::span<const double> x) {
  return pair.a().quadratic_form(x) / pair.b().quadratic_form(x);
}

Spectrum enumerate_spectrum(const MatrixPair& pair, const EnumerationOptions& opts) {
  const std::size_t n = pair.size();
  if (n > opts.n_max) {
    throw Error(ErrorCode::DimensionTooLarge,
                "support enumeration is limited to n <= " + std::to_string(opts.n_max) +
                    ", got n = " + std::to_string(n));
  }
  if (!pair.cert_b().is_pd) throw Error(ErrorCode::NotPositiveDefinite, "B is not positive definite");
  const double feas_tol = effective_feas_tol(pair, opts);
  const SymMatrix& a = pair.a();
  const SymMatrix& b = pair.b();

  Spectrum out;
  std::vector<std::size_t> idx;
  const unsigned long long count = 1ULL << n;
  for (unsigned long long mask = 1; mask < count; ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) idx.push_back(i);

    std::vector<std::pair<double, Vector>> candidates;
    if (idx.size() == 1) {
      const std::size_t p = idx.front();
      candidates.emplace_back(a(p, p) / b(p, p), Vector{1.0});
    } else {
      const EigenDecomposition eig = generalized_eig(a.principal(idx), b.principal(idx));
      for (std::size_t k = 0; k + 1 < eig.values.size(); ++k) {
        if (eig.values[k + 1] - eig.values[k] <= 1e-9 * (1.0 + std::abs(eig.values[k]))) {
          out.degenerate_supports.push_back(idx);
          break;
        }
      }
      for (std::size_t k = 0; k < eig.values.size(); ++k)
        candidates.emplace_back(eig.values[k], eig.vector(k));
    }

    for (auto& [mu, y] : candidates) {
      const double ymax = norm_inf(y);
      if (ymax == 0.0) continue;
      const bool has_pos = std::any_of(y.begin(), y.end(), [&](double v) { return v > opts.sign_tol * ymax; });
      const bool has_neg = std::any_of(y.begin(), y.end(), [&](double v) { return v < -opts.sign_tol * ymax; });
      if (has_pos && has_neg) continue;
      double total = 0.0;
      for (double v : y) total += v;
      if (total < 0.0) {
        for (double& v : y) v = -v;
        total = -total;
      }
      // Exact support: components on S must be strictly positive. Solutions
      // vanishing somewhere on S are found again at the smaller support.
      if (!std::all_of(y.begin(), y.end(), [&](double v) { return v > opts.support_tol * ymax; })) continue;

      Vector x(n, 0.0);
      for (std::size_t r = 0; r < idx.size(); ++r) x[idx[r]] = y[r] / total;
      Vector w = residual(pair, x, mu);
      bool feasible = true;
      for (std::size_t i = 0; i < n && feasible; ++i) {
        if (!(mask & (1ULL << i)) && w[i] < -feas_tol) feasible = false;
      }
      if (!feasible) continue;
      out.solutions.push_back({mu, std::move(x), idx, std::move(w)});
    }
  }

  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const EicpSolution& s, const EicpSolution& t) {
              return s.lambda < t.lambda || (s.lambda == t.lambda && s.support < t.support);
            });
  for (const EicpSolution& s : out.solutions) {
    if (out.values.empty() || s.lambda - out.values.back() > opts.dedup_rel_tol * (1.0 + std::abs(s.lambda))) {
      out.values.push_back(s.lambda);
    }
  }
  return out;
}

}  // namespace eicp
