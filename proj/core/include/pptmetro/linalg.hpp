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

#ifndef PPTMETRO_LINALG_HPP
#define PPTMETRO_LINALG_HPP

#include <vector>

#include "pptmetro/complex_matrix.hpp"
#include "pptmetro/rng.hpp"
#include "pptmetro/subsystems.hpp"

namespace pptmetro {

/// Spectral decomposition of a Hermitian matrix.
/// Invariants: ||M - V diag(L) V^dagger||_F <= 1e-10 max(1, ||M||_F) and
/// ||V^dagger V - I||_F <= 1e-10; eigenvalues sorted descending.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // orthonormal columns, same order as eigenvalues

  ComplexMatrix reconstruct() const;
};

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose the indices of the named subsystems. An involution: applying it
/// twice over the same set returns the input entry-for-entry.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemDims& dims,
                                const std::vector<Subsystem>& subsys);

/// Trace out the named subsystems, keeping the rest in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims,
                            const std::vector<Subsystem>& traced_out);

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. The input is symmetrized as (M + M^dagger)/2 first; sweeps stop
/// once the off-diagonal Frobenius norm falls below 1e-13 ||M||_F (at most 100
/// sweeps). Deterministic: identical input gives bit-identical output.
EigenSystem hermitian_eig(const ComplexMatrix& m);

/// Number of eigenvalues with |lambda| > rel_tol * max|lambda| (Hermitian input).
std::size_t matrix_rank(const ComplexMatrix& m, double rel_tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m);

/// True iff min eigenvalue >= -tol * max(1, max|lambda|) (Hermitian input).
bool is_psd(const ComplexMatrix& m, double tol = 1e-10);

/// exp(-i k t) for Hermitian k, via eigendecomposition. Result is unitary.
/// Throws DomainError if k is not Hermitian within 1e-10.
ComplexMatrix hermitian_exp(const ComplexMatrix& k, double t);

/// Principal square root of a PSD Hermitian matrix (negative eigenvalues
/// from roundoff are clipped to zero).
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

/// Eigenvalue clipping at zero: the Frobenius-nearest PSD matrix.
ComplexMatrix psd_projection(const ComplexMatrix& m);

ComplexMatrix random_hermitian(std::size_t n, Rng& rng);
ComplexMatrix random_density_matrix(std::size_t n, Rng& rng);

}  // namespace pptmetro

#endif  // PPTMETRO_LINALG_HPP
