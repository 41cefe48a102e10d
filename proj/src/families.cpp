#include "eicp/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eicp/error.hpp"
#include "eicp/linalg.hpp"

namespace eicp {

namespace {

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorCode::ParamOutOfRange, what);
}

}  // namespace

FamilyInstance all_ones_family(std::size_t n, double eps) {
  if (n < 2) out_of_range("family needs n >= 2");
  if (!(eps > 1.0) || !std::isfinite(eps)) out_of_range("family needs eps > 1");
  const double nd = static_cast<double>(n);
  SymMatrix a = SymMatrix::all_ones(n);
  a += eps * SymMatrix::identity(n);
  SymMatrix b = (nd - 1.0 + eps) * SymMatrix::identity(n);
  b += -1.0 * SymMatrix::all_ones(n);

  const double upper = (nd + eps) / (eps - 1.0);
  const Interval k_hull((1.0 + eps) / (nd - 2.0 + eps), upper);
  return {MatrixPair(std::move(a), std::move(b)), k_hull, k_hull,
          Interval(eps / (nd - 1.0 + eps), upper), AllOnesParams{n, eps}};
}

FamilyInstance proportional_family(std::size_t n, double beta, double r, double c) {
  if (n < 2) out_of_range("family needs n >= 2");
  if (!(r > 0.0) || !(beta > r) || !std::isfinite(beta)) out_of_range("family needs beta > R > 0");
  if (!(c > 0.0) || !std::isfinite(c)) out_of_range("family needs c > 0");
  const double rho = r / static_cast<double>(n - 1);
  SymMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b.set(i, j, i == j ? beta : rho);
  SymMatrix a = c * b;

  // Expectations use the off-diagonal row sum as stored, not the nominal R.
  double r_eff = 0.0;
  for (std::size_t j = 1; j < n; ++j) r_eff += b(0, j);
  const Interval k_hull(c * beta / (beta + r_eff), c * (beta + r_eff) / beta);
  return {MatrixPair(std::move(a), std::move(b)), k_hull, k_hull, Interval(c, c),
          ProportionalParams{n, beta, r, c}};
}

CommutingRatios commuting_ratio_check(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "A and B differ in size");
  const double comm = commutator_norm_inf(a, b);
  if (comm > 1e-9 * (1.0 + a.norm_inf() * b.norm_inf())) {
    throw Error(ErrorCode::NotCommuting, "A and B do not commute (||AB - BA||_inf = " +
                                             std::to_string(comm) + ")");
  }
  const std::size_t n = a.size();
  CommutingRatios out;
  out.generalized = generalized_eig(a, b).values;

  const EigenDecomposition eb = sym_eig(b);
  const double cluster_tol = 1e-8 * (1.0 + b.norm_inf());
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && eb.values[end] - eb.values[end - 1] <= cluster_tol) ++end;
    const std::size_t k = end - start;
    double beta = 0.0;
    for (std::size_t t = start; t < end; ++t) beta += eb.values[t];
    beta /= static_cast<double>(k);

    // A restricted to the eigenspace: V^T A V.
    std::vector<Vector> cols;
    for (std::size_t t = start; t < end; ++t) cols.push_back(eb.vector(t));
    SymMatrix restricted(k);
    for (std::size_t p = 0; p < k; ++p) {
      const Vector av = a.multiply(cols[p]);
      for (std::size_t q = p; q < k; ++q) restricted.set(p, q, dot(cols[q], av));
    }
    for (double alpha : sym_eig(restricted).values) out.ratios.push_back(alpha / beta);
    start = end;
  }
  std::sort(out.ratios.begin(), out.ratios.end());

  out.matches = out.ratios.size() == out.generalized.size();
  for (std::size_t k = 0; out.matches && k < out.ratios.size(); ++k) {
    out.matches = std::abs(out.ratios[k] - out.generalized[k]) <= 1e-7 * (1.0 + std::abs(out.generalized[k]));
  }
  return out;
}

}  // namespace eicp
