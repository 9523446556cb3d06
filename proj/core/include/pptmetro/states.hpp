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

#ifndef PPTMETRO_STATES_HPP
#define PPTMETRO_STATES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pptmetro/complex_matrix.hpp"
#include "pptmetro/linalg.hpp"
#include "pptmetro/subsystems.hpp"

namespace pptmetro {

// Two families of (2d x 2d) bound entangled states are built here. Both live
// on four subsystems: key qubits A,B and shield qudits A',B' of dimension d.
// Mixing weights shared by the families:
//   p1 = sqrt(d)/(1+sqrt(d)),  p2 = 1 - p1 = 1/(1+sqrt(d)).
double p1_weight(std::size_t d);
double p2_weight(std::size_t d);

enum class UnitaryKind { Fourier, Hadamard };

/// Parameters of the first family. Hadamard requires d a power of two.
struct F1Spec {
  std::size_t d = 2;
  UnitaryKind unitary = UnitaryKind::Fourier;
};

/// A named eigenvector of a constructed state, with its documented eigenvalue.
struct LabeledKet {
  std::string label;
  double eigenvalue = 0.0;
  ComplexMatrix ket;  // column vector
};

/// A constructed density matrix together with its labeled eigenvectors.
struct StateBundle {
  ComplexMatrix rho;
  SubsystemDims dims;
  std::vector<LabeledKet> nonzero_kets;  // v_ij, w_i (family 1); z_ij, s_i, |10ii> (family 2)
  std::vector<LabeledKet> zero_kets;     // v-_ij, w-_i, z-_ij
  std::string family;
};

/// u_jk = exp(2 pi i j k / d) / sqrt(d).
ComplexMatrix fourier_unitary(std::size_t d);

/// 2^{-n/2} [[1,1],[1,-1]]^{(x) n}; real symmetric, entries +-1/sqrt(d), d = 2^n.
ComplexMatrix hadamard_unitary(std::size_t n);

/// First family of PPT invariant states, assembled from its four defining
/// sums. Nonzero eigenvectors: d^2 vectors v_ij at p1/d^2 and d vectors w_i
/// at p2/d; the sign-flipped partners v-_ij, w-_i span part of the kernel.
StateBundle build_rho_f1(const F1Spec& spec, SubsystemOrder order = SubsystemOrder::ABAB);

/// The set of d orthogonal d x d matrices Q^j underlying the second family,
/// with all derived objects: the grouping Xi_m of index pairs, the sign
/// factors S_ij, the constants D_m = sqrt(d/N_m), the counts N_m, and the
/// orthonormal basis qbar_m (stored as d-dimensional coefficient vectors over
/// the |10kk> subspace).
struct QFamily {
  enum class Kind { D3Rotations, PowerOfTwoPermutations };

  Kind kind = Kind::D3Rotations;
  std::size_t d = 3;
  double phi0 = 0.0;  // D3Rotations only

  std::vector<ComplexMatrix> q_mats;                        // Q^j, j = 0..d-1
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> xi_sets;  // Xi_m
  std::vector<std::vector<double>> s_factors;               // S_ij (0 where q_ij = 0)
  std::vector<double> d_consts;                             // D_m
  std::vector<std::size_t> n_counts;                        // N_m
  std::vector<ComplexMatrix> qbar_basis;                    // qbar_m, d x 1 each
};

/// d = 3 family: Q^k has a 2x2 rotation-reflection block with angle
/// phi_k = 2 pi k / 3 + phi0 and a 1x1 unit block.
QFamily q_family_d3(double phi0 = 0.0);

/// d = 2^n family: the d permutation matrices built recursively from tensor
/// products of the identity and the bit-flip X, ordered so that matrix k has
/// its first-row 1 in column k.
QFamily p_family(std::size_t n);

/// The |t_m> vectors of a Q family, as full-space kets (order ABA'B').
std::vector<ComplexMatrix> t_kets(const QFamily& family);

/// The |s_m> vectors paired with the family: the explicit three vectors for
/// d = 3, and s_m = t_m for d = 2^n.
std::vector<ComplexMatrix> s_kets(const QFamily& family);

/// Second family of PPT states, assembled from its eigendecomposition.
StateBundle build_rho_f2(std::size_t d, const QFamily& family,
                         SubsystemOrder order = SubsystemOrder::ABAB);

/// Convenience overload choosing the Q family for d: the rotation family at
/// d = 3, the permutation family at d = 2^n. Other d are unsupported.
StateBundle build_rho_f2(std::size_t d, SubsystemOrder order = SubsystemOrder::ABAB);

/// The 16 x 16 two-ququart state: p sum_{n=1..4} |Psi_n><Psi_n| +
/// q sum_{n=5,6} |Psi_n><Psi_n| with q = (sqrt(2)-1)/2, p = (1-2q)/4.
StateBundle build_rho_4x4();

/// Private bit with shield operator x (unit trace norm, checked within 1e-8):
/// the block matrix (1/2) [[sqrt(xx+),0,0,x],[0,0,0,0],[0,0,0,0],[x+,0,0,sqrt(x+x)]]
/// over the key basis 00,01,10,11.
ComplexMatrix build_private_bit(const ComplexMatrix& x);

/// The two unit-trace-norm shield operators generating the first family:
/// X = (1/(d sqrt(d))) sum u_ij |ij><ji| and Y = sqrt(d) X^Gamma = (1/d) sum u_ij |ii><jj|.
ComplexMatrix private_bit_x(std::size_t d, UnitaryKind kind);
ComplexMatrix private_bit_y(std::size_t d, UnitaryKind kind);

/// First family built along the private-bit route: p1 rho(X) + p2 rho', where
/// rho' conjugates rho(Y) by a key bit flip. Kept independent of
/// build_rho_f1 so the two constructions can be checked against each other.
ComplexMatrix f1_from_private_bits(std::size_t d, UnitaryKind kind);

/// H = sigma^z_A + sigma^z_B on the key qubits (order ABA'B'); diagonal with
/// entries +2, 0, 0, -2 on the four key sectors.
ComplexMatrix hamiltonian_h(std::size_t d);

/// The matching Hamiltonian for a matrix stored with the given factorization:
/// key qubits get sigma^z, shields get identity; for the bipartite 4 x 4
/// layout this is D (x) 1 + 1 (x) D with D = diag(1,1,-1,-1).
ComplexMatrix hamiltonian_for(const SubsystemDims& dims);

/// D (x) 1 + 1 (x) D on 16 dimensions, D = diag(1,1,-1,-1).
ComplexMatrix hamiltonian_4x4();

/// The local terms (H_1, H_2) of hamiltonian_for, for separable-bound input.
std::pair<ComplexMatrix, ComplexMatrix> hamiltonian_local_terms(const SubsystemDims& dims);

/// p rho + (1-p) I/n.
ComplexMatrix white_noise_mix(const ComplexMatrix& rho, double p);

/// Permute tensor factors: slot k of the result holds subsystem perm[k] of
/// the input. Use dims.permuted(perm) for the resulting factorization.
ComplexMatrix reorder_subsystems(const ComplexMatrix& rho, const SubsystemDims& dims,
                                 const std::vector<std::size_t>& perm);

/// The flip exchanging A with B and A' with B' (a permutation matrix, F^2 = I).
/// Requires dim A = dim B and dim A' = dim B'.
ComplexMatrix flip_operator(const SubsystemDims& dims);

/// Decomposition of a flip-invariant state into its symmetric and
/// antisymmetric parts: rho = w * symmetric + (1-w) * antisymmetric, each part
/// trace-1 PSD and supported on the +1 / -1 eigenspace of the flip.
struct SymSplit {
  ComplexMatrix symmetric;
  ComplexMatrix antisymmetric;
  double symmetric_weight = 0.0;
};

/// Throws DomainError (with the invariance residual in the message) when
/// ||F rho F - rho||_F > 1e-10.
SymSplit sym_antisym_split(const ComplexMatrix& rho, const SubsystemDims& dims);

/// Basis relabeling taking the d = 2 key/shield layout (order ABA'B') to the
/// two-ququart layout: the pair (b,b') becomes the first ququart and (a,a')
/// the second, with the two-bit relabeling 00->1, 01->0, 10->2, 11->3.
ComplexMatrix relabel_key_shield_to_4x4(const ComplexMatrix& m);

/// |phi+><phi+|_AB (x) I_{A'B'} / d^2, the probe reaching the flat upper bound.
ComplexMatrix maximally_entangled_probe(std::size_t d);

}  // namespace pptmetro

#endif  // PPTMETRO_STATES_HPP
