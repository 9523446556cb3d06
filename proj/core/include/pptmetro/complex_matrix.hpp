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

#ifndef PPTMETRO_COMPLEX_MATRIX_HPP
#define PPTMETRO_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "pptmetro/errors.hpp"

namespace pptmetro {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, 0-based indices. The one carrier type for
/// states, Hamiltonians, unitaries and kets (kets are n x 1 matrices).
/// Values are immutable-by-convention after construction in this library:
/// every operation returns a fresh matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Complex* row(std::size_t r) { return data_.data() + r * cols_; }
  const Complex* row(std::size_t r) const { return data_.data() + r * cols_; }
  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// max_ij |M_ij - conj(M_ji)| <= tol * max(1, max_abs());
  bool is_hermitian(double tol = 1e-12) const;
  /// (M + M^dagger) / 2
  ComplexMatrix hermitized() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// |idx> as an n x 1 column.
ComplexMatrix basis_ket(std::size_t n, std::size_t idx);

/// <a|b> for column vectors.
Complex inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// |a><a| for a column vector.
ComplexMatrix outer(const ComplexMatrix& a);

/// |a><b| for column vectors.
ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b);

/// Euclidean norm of a column vector.
double ket_norm(const ComplexMatrix& a);

/// Re tr(rho * op).
double real_expectation(const ComplexMatrix& rho, const ComplexMatrix& op);

/// max_ij |A_ij - B_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||A - B||_F.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// i[A,B] = i(AB - BA); Hermitian whenever A and B are.
ComplexMatrix commutator_i(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pptmetro

#endif  // PPTMETRO_COMPLEX_MATRIX_HPP
