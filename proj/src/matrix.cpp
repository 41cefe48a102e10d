#include "eicp/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eicp/error.hpp"

namespace eicp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NegativeShift: return "NegativeShift";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

Vector DenseMatrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
}

SymMatrix::SymMatrix(std::size_t n, std::span<const double> row_major, double sym_tol)
    : SymMatrix(n) {
  if (row_major.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(row_major.size()));
  }
  double scale = 0.0;
  for (double v : row_major) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
    scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    data_[i * n + i] = row_major[i * n + i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = row_major[i * n + j];
      const double lower = row_major[j * n + i];
      if (std::abs(upper - lower) > sym_tol * scale) {
        throw Error(ErrorCode::NotSymmetric, "entries (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ") and (" +
                                                 std::to_string(j + 1) + "," +
                                                 std::to_string(i + 1) + ") differ");
      }
      const double v = upper == lower ? upper : 0.5 * (upper + lower);
      data_[i * n + j] = v;
      data_[j * n + i] = v;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::all_ones(std::size_t n) {
  SymMatrix m(n);
  std::fill(m.data_.begin(), m.data_.end(), 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  SymMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.data_[i * m.n_ + i] = diag[i];
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

double SymMatrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double SymMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double SymMatrix::max_diagonal() const noexcept {
  double best = data_[0];
  for (std::size_t i = 1; i < n_; ++i) best = std::max(best, data_[i * n_ + i]);
  return best;
}

SymMatrix SymMatrix::principal(std::span<const std::size_t> idx) const {
  SymMatrix sub(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      sub.data_[r * idx.size() + c] = (*this)(idx[r], idx[c]);
  return sub;
}

Vector SymMatrix::multiply(std::span<const double> x) const {
  Vector y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) y[i] = dot(row(i), x);
  return y;
}

double SymMatrix::quadratic_form(std::span<const double> x) const {
  return dot(x, multiply(x));
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
SymMatrix operator*(double s, SymMatrix m) { return m *= s; }

double commutator_norm_inf(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double ab = 0.0;
      double ba = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        ab += a(i, k) * b(k, j);
        ba += b(i, k) * a(k, j);
      }
      row_sum += std::abs(ab - ba);
    }
    best = std::max(best, row_sum);
  }
  return best;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm_inf(std::span<const double> x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace eicp
