// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_LINALG_COMPLEX_MATRIX_HPP
#define HRRIS_LINALG_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hrris::linalg {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Column vectors are n x 1 matrices.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; rejects size mismatch and
  /// non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix column(std::span<const cplx> values);
  static ComplexMatrix diagonal(std::span<const cplx> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Flat access for column vectors.
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix col(std::size_t c) const;
  /// Row r as a 1 x cols matrix.
  ComplexMatrix row(std::size_t r) const;
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;

  cplx trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  /// this += s * x * y^H for column vectors x, y.
  void add_outer(cplx s, const ComplexMatrix& x, const ComplexMatrix& y);

  bool all_finite() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

/// x^H y for column vectors.
cplx inner(const ComplexMatrix& x, const ComplexMatrix& y);
/// x y^H
ComplexMatrix outer(const ComplexMatrix& x, const ComplexMatrix& y);

/// Partial-pivot LU factorization of a square matrix.
class LuDecomposition {
public:
  explicit LuDecomposition(const ComplexMatrix& a);

  ComplexMatrix solve(const ComplexMatrix& b) const;
  ComplexMatrix inverse() const;
  /// log2 |det A|
  double log2_abs_det() const noexcept { return log2_abs_det_; }
  /// det A / |det A|
  cplx det_phase() const noexcept { return det_phase_; }

private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  double log2_abs_det_ = 0.0;
  cplx det_phase_{1.0, 0.0};
};

/// Solves A X = B. Throws SingularMatrix when a pivot falls below the
/// relative threshold.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);

/// log2 |det A| for matrices whose determinant is real and positive.
double logdet(const ComplexMatrix& a);

struct Rank1Eigen {
  cplx eigenvalue{0.0, 0.0};
  ComplexMatrix eigenvector;  // unit norm; empty when is_zero
  bool is_zero = false;
};

/// Sole nonzero eigenpair of a rank-1 matrix M = a b^H: eigenvalue tr(M) and
/// eigenvector a. The caller may pass the left factor a; otherwise the
/// largest column of M is used.
Rank1Eigen rank1_eigen(const ComplexMatrix& m,
                       const std::optional<ComplexMatrix>& left_factor = {});

/// Deterministic unitary whose first column is u, built from one Householder
/// reflection.
ComplexMatrix complete_basis(const ComplexMatrix& u, std::size_t dim);

}  // namespace hrris::linalg

#endif  // HRRIS_LINALG_COMPLEX_MATRIX_HPP
