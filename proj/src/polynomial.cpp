#include "eicp/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace eicp {

namespace {

constexpr double kTouchTol = 1e-12;

double bisect(const Polynomial& p, double lo, double hi, double flo, double abs_tol) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= abs_tol || mid <= lo || mid >= hi) return mid;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

int Polynomial::degree() const noexcept {
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    if (coeffs_[k] != 0.0) return static_cast<int>(k);
  return -1;
}

double Polynomial::operator()(double y) const noexcept {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * y + coeffs_[k];
  return acc;
}

double Polynomial::magnitude(double y) const noexcept {
  double acc = 0.0;
  const double ay = std::abs(y);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * ay + std::abs(coeffs_[k]);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::cauchy_bound() const {
  const int deg = degree();
  if (deg <= 0) return 1.0;
  const double lead = std::abs(coeffs_[static_cast<std::size_t>(deg)]);
  double ratio = 0.0;
  for (int k = 0; k < deg; ++k) ratio = std::max(ratio, std::abs(coeffs_[static_cast<std::size_t>(k)]) / lead);
  return 1.0 + ratio;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

std::vector<double> Polynomial::real_roots(double lo, double hi, double abs_tol) const {
  const int deg = degree();
  if (deg <= 0) return {};
  if (deg == 1) {
    const double r = -coeffs_[0] / coeffs_[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }

  std::vector<double> points{lo};
  for (double c : derivative().real_roots(lo, hi, abs_tol))
    if (c > points.back()) points.push_back(c);
  if (hi > points.back()) points.push_back(hi);

  std::vector<double> roots;
  auto add = [&](double r) {
    if (roots.empty() || r - roots.back() > abs_tol) roots.push_back(r);
  };
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double u = points[k];
    const double fu = (*this)(u);
    const bool interior = k > 0 && k + 1 < points.size();
    if (fu == 0.0 || (interior && std::abs(fu) <= kTouchTol * magnitude(u))) add(u);
    if (k + 1 == points.size()) break;
    const double v = points[k + 1];
    const double fv = (*this)(v);
    if (fu != 0.0 && fv != 0.0 && (fu < 0.0) != (fv < 0.0)) add(bisect(*this, u, v, fu, abs_tol));
  }
  return roots;
}

}  // namespace eicp
