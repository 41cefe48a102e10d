#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eicp {

using Vector = std::vector<double>;

/// Relative asymmetry accepted by the SymMatrix constructor.
inline constexpr double kSymmetryTol = 1e-12;

/// Dense row-major rectangular matrix. Used for triangular factors and
/// eigenvector bases; symmetric operands are carried by SymMatrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Dense symmetric matrix of doubles, n >= 1. Entries are stored in full
/// row-major form and kept exactly symmetric.
class SymMatrix {
 public:
  /// Zero matrix of dimension n.
  explicit SymMatrix(std::size_t n);

  /// Builds from a row-major n*n array. Input whose asymmetry exceeds
  /// sym_tol relative to the largest entry is rejected with NotSymmetric;
  /// smaller asymmetry is averaged away.
  SymMatrix(std::size_t n, std::span<const double> row_major,
            double sym_tol = kSymmetryTol);

  static SymMatrix identity(std::size_t n);
  static SymMatrix all_ones(std::size_t n);
  static SymMatrix diagonal(std::span<const double> diag);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Sets entries (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  std::span<const double> data() const noexcept { return data_; }

  /// Maximum absolute row sum.
  double norm_inf() const noexcept;
  double max_abs() const noexcept;
  double max_diagonal() const noexcept;

  /// Principal submatrix on the given (sorted, distinct) indices.
  SymMatrix principal(std::span<const std::size_t> idx) const;

  Vector multiply(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x) const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator*=(double s);

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t n_;
  Vector data_;
};

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs);
SymMatrix operator*(double s, SymMatrix m);

/// Maximum absolute row sum of A*B - B*A.
double commutator_norm_inf(const SymMatrix& a, const SymMatrix& b);

double dot(std::span<const double> x, std::span<const double> y);
double norm_inf(std::span<const double> x);

}  // namespace eicp
