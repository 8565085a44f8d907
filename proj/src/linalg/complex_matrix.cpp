// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "linalg/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "common/error.hpp"
#include "common/tolerances.hpp"

namespace hrris::linalg {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::InvalidArgument,
         std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
             "x" + std::to_string(a.cols()) + " vs " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    fail(ErrorCode::InvalidArgument,
         "ComplexMatrix: expected " + std::to_string(rows_ * cols_) +
             " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) {
    fail(ErrorCode::InvalidArgument, "ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> values) {
  return ComplexMatrix(values.size(), 1,
                       std::vector<cplx>(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::col(std::size_t c) const {
  ComplexMatrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::row(std::size_t r) const {
  ComplexMatrix out(1, cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), cols_,
              out.data_.begin());
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    fail(ErrorCode::InvalidArgument, "ComplexMatrix::block out of range");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

void ComplexMatrix::add_outer(cplx s, const ComplexMatrix& x,
                              const ComplexMatrix& y) {
  if (x.cols_ != 1 || y.cols_ != 1 || x.rows_ != rows_ || y.rows_ != cols_) {
    fail(ErrorCode::InvalidArgument, "add_outer: shape mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    const cplx xr = s * x.data_[r];
    for (std::size_t c = 0; c < cols_; ++c)
      data_[r * cols_ + c] += xr * std::conj(y.data_[c]);
  }
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::InvalidArgument,
         "operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
             std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  a *= s;
  return a;
}

cplx inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    fail(ErrorCode::InvalidArgument, "inner: expects equal-length columns");
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

ComplexMatrix outer(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows(), y.rows());
  out.add_outer(1.0, x, y);
  return out;
}

LuDecomposition::LuDecomposition(const ComplexMatrix& a) : lu_(a) {
  if (!a.is_square() || a.empty()) {
    fail(ErrorCode::InvalidArgument, "LU: matrix must be square and nonempty");
  }
  const std::size_t n = a.rows();
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  const double threshold = tol::kPivotRelative * a.max_abs();
  bool odd = false;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu_(r, k)) > best) {
        best = std::abs(lu_(r, k));
        p = r;
      }
    }
    if (!(best > threshold)) {
      fail(ErrorCode::SingularMatrix,
           "LU: pivot " + std::to_string(best) + " at column " +
               std::to_string(k) + " below threshold");
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(p, c));
      std::swap(perm_[k], perm_[p]);
      odd = !odd;
    }
    const cplx pivot = lu_(k, k);
    log2_abs_det_ += std::log2(std::abs(pivot));
    det_phase_ *= pivot / std::abs(pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = lu_(r, k) / pivot;
      lu_(r, k) = f;
      if (f == cplx{}) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= f * lu_(k, c);
    }
  }
  if (odd) det_phase_ = -det_phase_;
}

ComplexMatrix LuDecomposition::solve(const ComplexMatrix& b) const {
  const std::size_t n = lu_.rows();
  if (b.rows() != n) {
    fail(ErrorCode::InvalidArgument, "LU solve: right-hand side row mismatch");
  }
  ComplexMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = b(perm_[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x(j, c);
      x(i, c) = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      cplx s = x(i, c);
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x(j, c);
      x(i, c) = s / lu_(i, i);
    }
  }
  return x;
}

ComplexMatrix LuDecomposition::inverse() const {
  return solve(ComplexMatrix::identity(lu_.rows()));
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  return LuDecomposition(a).solve(b);
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  return LuDecomposition(a).inverse();
}

double logdet(const ComplexMatrix& a) {
  const LuDecomposition lu(a);
  if (!(lu.det_phase().real() > tol::kDetPhase)) {
    fail(ErrorCode::NonPositiveDeterminant,
         "logdet: determinant phase " +
             std::to_string(std::arg(lu.det_phase())) + " rad is not positive");
  }
  return lu.log2_abs_det();
}

Rank1Eigen rank1_eigen(const ComplexMatrix& m,
                       const std::optional<ComplexMatrix>& left_factor) {
  if (!m.is_square() || m.empty()) {
    fail(ErrorCode::InvalidArgument, "rank1_eigen: matrix must be square");
  }
  Rank1Eigen out;
  const double scale = m.max_abs();
  if (scale <= tol::kZeroMatrix) {
    out.is_zero = true;
    return out;
  }
#ifndef NDEBUG
  {
    // (a b^H)^2 = (b^H a) a b^H for any rank-1 matrix.
    ComplexMatrix residual = m * m - m.trace() * m;
    if (residual.max_abs() > tol::kRankOne * scale * scale * m.rows()) {
      fail(ErrorCode::InvalidArgument, "rank1_eigen: matrix is not rank 1");
    }
  }
#endif
  out.eigenvalue = m.trace();
  ComplexMatrix v;
  if (left_factor) {
    v = *left_factor;
  } else {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < m.rows(); ++r) s += std::norm(m(r, c));
      if (s > best_norm) {
        best_norm = s;
        best = c;
      }
    }
    v = m.col(best);
  }
  const double norm = v.frobenius_norm();
  if (norm <= tol::kZeroMatrix) {
    out.is_zero = true;
    return out;
  }
  v *= 1.0 / norm;
  out.eigenvector = std::move(v);
  return out;
}

ComplexMatrix complete_basis(const ComplexMatrix& u, std::size_t dim) {
  if (u.cols() != 1 || u.rows() != dim || dim == 0) {
    fail(ErrorCode::InvalidArgument, "complete_basis: u must be dim x 1");
  }
  const double norm = u.frobenius_norm();
  if (std::abs(norm - 1.0) > tol::kUnitNorm) {
    fail(ErrorCode::NotUnit,
         "complete_basis: |u| = " + std::to_string(norm) + " is not 1");
  }
  // x = e^{j phi} e1 has x^H u real, so the reflection along w = x + u maps
  // x to -u. U = -H diag(e^{j phi}, 1, ..., 1) then has first column u.
  const double phi = std::abs(u[0]) > 0.0 ? std::arg(u[0]) : 0.0;
  const cplx rot = std::polar(1.0, phi);
  ComplexMatrix w = u;
  w[0] += rot;
  const double w2 = std::pow(w.frobenius_norm(), 2);

  ComplexMatrix h = ComplexMatrix::identity(dim);
  h.add_outer(-2.0 / w2, w, w);
  ComplexMatrix result(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    result(r, 0) = -h(r, 0) * rot;
    for (std::size_t c = 1; c < dim; ++c) result(r, c) = -h(r, c);
  }
  return result;
}

}  // namespace hrris::linalg
