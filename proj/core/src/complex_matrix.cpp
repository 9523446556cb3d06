// Copyright 2026 The pptmetro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pptmetro/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace pptmetro {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  const double scale = std::max(1.0, max_abs());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol * scale) return false;
  return true;
}

ComplexMatrix ComplexMatrix::hermitized() const {
  if (!is_square()) throw DimensionError("hermitized: matrix is not square");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("operator+=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("operator-=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("operator*: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  const std::size_t n = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* oi = out.row(i);
    const Complex* ai = a.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = ai[k];
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* bk = b.row(k);
      for (std::size_t j = 0; j < m; ++j) oi[j] += aik * bk[j];
    }
  }
  return out;
}

ComplexMatrix basis_ket(std::size_t n, std::size_t idx) {
  ComplexMatrix v(n, 1);
  v(idx, 0) = 1.0;
  return v;
}

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != 1 || b.cols() != 1)
    throw DimensionError("inner: expects two column vectors of equal length");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(a(i, 0)) * b(i, 0);
  return s;
}

ComplexMatrix outer(const ComplexMatrix& a) { return outer(a, a); }

ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != 1 || b.cols() != 1) throw DimensionError("outer: expects column vectors");
  ComplexMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Complex ai = a(i, 0);
    if (ai == Complex(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < b.rows(); ++j) out(i, j) = ai * std::conj(b(j, 0));
  }
  return out;
}

double ket_norm(const ComplexMatrix& a) {
  return std::sqrt(std::abs(inner(a, a)));
}

double real_expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols() || !rho.is_square())
    throw DimensionError("real_expectation: shape mismatch");
  // tr(rho*op) without forming the product.
  Complex s = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t k = 0; k < rho.cols(); ++k) s += rho(i, k) * op(k, i);
  return s.real();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("frobenius_distance: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

ComplexMatrix commutator_i(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = a * b - b * a;
  return Complex(0.0, 1.0) * c;
}

}  // namespace pptmetro
