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

#ifndef PPTMETRO_METROLOGY_HPP
#define PPTMETRO_METROLOGY_HPP

#include <cstddef>

#include "pptmetro/complex_matrix.hpp"

namespace pptmetro {

struct ToleranceConfig {
  double eig_zero_cut = 1e-12;   // eigenvalue clustering width (relative)
  double qfi_pair_cut = 1e-12;   // drop pairs with lambda_mu + lambda_nu below this * max
  double bisection_tol = 1e-10;  // robustness bracket width
};

/// Figures of merit for one probe state and Hamiltonian.
struct QfiReport {
  double qfi = 0.0;
  double variance = 0.0;  // (Delta H)^2
  double mean_h = 0.0;
  double sep_bound = 0.0;
  double gain = 0.0;  // qfi / sep_bound
  std::size_t d = 0;
};

/// Quantum Fisher information
///   F = 2 sum_{mu,nu} (l_mu - l_nu)^2 / (l_mu + l_nu) |<mu|H|nu>|^2.
/// Terms are accumulated over eigenvalue clusters so the value does not
/// depend on the eigensolver's basis choice inside degenerate subspaces;
/// pairs with l_mu + l_nu <= qfi_pair_cut * l_max are dropped (they carry no
/// weight but would divide by zero).
double qfi(const ComplexMatrix& rho, const ComplexMatrix& h, const ToleranceConfig& tol = {});

/// Same quantity through the rearranged form
///   F = 4 <H^2> - 8 sum_{mu,nu} l_mu l_nu / (l_mu + l_nu) |<mu|H|nu>|^2,
/// kept as an independent cross-check of qfi().
double qfi_alt(const ComplexMatrix& rho, const ComplexMatrix& h, const ToleranceConfig& tol = {});

/// Best quantum Fisher information over separable states for H = H1 + H2:
/// sum_n (l_max(H_n) - l_min(H_n))^2.
double sep_bound(const ComplexMatrix& h1, const ComplexMatrix& h2);

/// 16 sqrt(d) / (1 + sqrt(d)); both state families attain this value.
double qfi_f1_analytic(std::size_t d);

/// QFI of the family state mixed with white noise at weight p:
/// 2 p1 p^2 / ((2 p1 - 1) p + 1) * 16 sqrt(d)/(1+sqrt(d)).
double qfi_noisy_analytic(std::size_t d, double p);

/// Largest white-noise fraction r keeping the family state above the
/// separable bound: 1 - (2p1 - 1 + sqrt((2p1-1)^2 + 16 p1^2)) / (8 p1^2).
double robustness_analytic(std::size_t d);

/// Bisection on r solving qfi(p rho + (1-p) I/n, h) = sep at p = 1 - r. The
/// noisy spectrum is linear in p with fixed eigenvectors, so the search
/// reuses one eigendecomposition. Throws NotUsefulError when the state does
/// not beat the bound.
double robustness_numeric(const ComplexMatrix& rho, const ComplexMatrix& h, double sep,
                          const ToleranceConfig& tol = {});

/// Symmetric logarithmic derivative scaled to maximize the see-saw objective
/// -<M^2> + 2<i[M,H]>; at the output the objective equals the QFI.
ComplexMatrix sld(const ComplexMatrix& rho, const ComplexMatrix& h,
                  const ToleranceConfig& tol = {});

/// (Delta M)^2 / <i[M,H]>^2. Throws DomainError when the denominator
/// vanishes (|<i[M,H]>| <= 1e-12).
double error_propagation(const ComplexMatrix& rho, const ComplexMatrix& m,
                         const ComplexMatrix& h);

double mean_of(const ComplexMatrix& rho, const ComplexMatrix& op);
double variance_of(const ComplexMatrix& rho, const ComplexMatrix& op);

QfiReport make_qfi_report(const ComplexMatrix& rho, const ComplexMatrix& h,
                          const ComplexMatrix& h1, const ComplexMatrix& h2, std::size_t d,
                          const ToleranceConfig& tol = {});

}  // namespace pptmetro

#endif  // PPTMETRO_METROLOGY_HPP
