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

#include "pptmetro/states.hpp"

#include <algorithm>
#include <cmath>

namespace pptmetro {

namespace {

bool is_power_of_two(std::size_t d) { return d >= 1 && (d & (d - 1)) == 0; }

std::size_t log2_exact(std::size_t d) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

// Basis index of |a b i j> in the ABA'B' layout with shield dimension d.
std::size_t idx4(std::size_t a, std::size_t b, std::size_t i, std::size_t j, std::size_t d) {
  return ((a * 2 + b) * d + i) * d + j;
}

// old index -> new index map realizing a subsystem permutation.
std::vector<std::size_t> index_permutation(const SubsystemDims& dims,
                                           const std::vector<std::size_t>& perm) {
  const SubsystemDims new_dims = dims.permuted(perm);  // validates perm
  const auto strides = subsystem_strides(dims.dims);
  const auto new_strides = subsystem_strides(new_dims.dims);
  const std::size_t n = dims.total_dim();
  std::vector<std::size_t> map(n);
  std::vector<std::size_t> digits;
  for (std::size_t e = 0; e < n; ++e) {
    decompose_index(e, dims.dims, strides, digits);
    std::size_t out = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) out += digits[perm[k]] * new_strides[k];
    map[e] = out;
  }
  return map;
}

ComplexMatrix permute_matrix(const ComplexMatrix& m, const std::vector<std::size_t>& map) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

ComplexMatrix permute_ket(const ComplexMatrix& v, const std::vector<std::size_t>& map) {
  ComplexMatrix out(v.rows(), 1);
  for (std::size_t r = 0; r < v.rows(); ++r) out(map[r], 0) = v(r, 0);
  return out;
}

// Applies the ABA'B' -> AA'BB' reordering to a finished bundle when asked.
void apply_order(StateBundle& bundle, SubsystemOrder order) {
  if (order == SubsystemOrder::ABAB) return;
  const std::vector<std::size_t> perm = {0, 2, 1, 3};  // A, A', B, B'
  const auto map = index_permutation(bundle.dims, perm);
  bundle.rho = permute_matrix(bundle.rho, map);
  for (LabeledKet& k : bundle.nonzero_kets) k.ket = permute_ket(k.ket, map);
  for (LabeledKet& k : bundle.zero_kets) k.ket = permute_ket(k.ket, map);
  bundle.dims = bundle.dims.permuted(perm);
}

ComplexMatrix unitary_for(std::size_t d, UnitaryKind kind) {
  if (kind == UnitaryKind::Fourier) return fourier_unitary(d);
  if (!is_power_of_two(d))
    throw DomainError("Hadamard unitary requires d a power of two, got d = " + std::to_string(d));
  return hadamard_unitary(log2_exact(d));
}

std::string ij_label(const char* stem, std::size_t i, std::size_t j) {
  return std::string(stem) + "_" + std::to_string(i) + std::to_string(j);
}

std::string i_label(const char* stem, std::size_t i) {
  return std::string(stem) + "_" + std::to_string(i);
}

}  // namespace

double p1_weight(std::size_t d) {
  const double sd = std::sqrt(static_cast<double>(d));
  return sd / (1.0 + sd);
}

double p2_weight(std::size_t d) { return 1.0 - p1_weight(d); }

ComplexMatrix fourier_unitary(std::size_t d) {
  if (d < 1) throw DomainError("fourier_unitary: d must be >= 1");
  ComplexMatrix u(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const double phase = 2.0 * M_PI * static_cast<double>(j * k) / static_cast<double>(d);
      u(j, k) = Complex(std::cos(phase) * scale, std::sin(phase) * scale);
    }
  return u;
}

ComplexMatrix hadamard_unitary(std::size_t n) {
  if (n < 1) throw DomainError("hadamard_unitary: n must be >= 1");
  ComplexMatrix h2(2, 2);
  h2(0, 0) = 1.0;
  h2(0, 1) = 1.0;
  h2(1, 0) = 1.0;
  h2(1, 1) = -1.0;
  ComplexMatrix u = h2;
  for (std::size_t k = 1; k < n; ++k) u = kron(u, h2);
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
  return scale * u;
}

StateBundle build_rho_f1(const F1Spec& spec, SubsystemOrder order) {
  if (spec.d < 2) throw DomainError("build_rho_f1: d must be >= 2");
  const std::size_t d = spec.d;
  const ComplexMatrix u = unitary_for(d, spec.unitary);
  const double p1 = p1_weight(d), p2 = p2_weight(d);
  const double sd = std::sqrt(static_cast<double>(d));
  const std::size_t n = 4 * d * d;

  ComplexMatrix rho(n, n);
  const double c1 = p1 / (2.0 * d * d);
  const double c2 = p1 / (2.0 * d * sd);
  const double c3 = p2 / (2.0 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      rho(idx4(0, 0, i, j, d), idx4(0, 0, i, j, d)) += c1;
      rho(idx4(1, 1, i, j, d), idx4(1, 1, i, j, d)) += c1;
      rho(idx4(0, 0, i, j, d), idx4(1, 1, j, i, d)) += c2 * u(i, j);
      rho(idx4(1, 1, j, i, d), idx4(0, 0, i, j, d)) += c2 * std::conj(u(i, j));
      rho(idx4(0, 1, i, i, d), idx4(1, 0, j, j, d)) += c3 * u(i, j);
      rho(idx4(1, 0, j, j, d), idx4(0, 1, i, i, d)) += c3 * std::conj(u(i, j));
    }
    rho(idx4(0, 1, i, i, d), idx4(0, 1, i, i, d)) += c3;
    rho(idx4(1, 0, i, i, d), idx4(1, 0, i, i, d)) += c3;
  }

  StateBundle bundle;
  bundle.rho = rho.hermitized();
  bundle.dims = SubsystemDims::key_shield(d);
  bundle.family = spec.unitary == UnitaryKind::Fourier ? "f1-fourier" : "f1-hadamard";

  const double lambda_v = p1 / (d * d);
  const double lambda_w = p2 / d;
  const double inv_sqrt2 = M_SQRT1_2;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix plus(n, 1), minus(n, 1);
      plus(idx4(0, 0, i, j, d), 0) = inv_sqrt2;
      plus(idx4(1, 1, j, i, d), 0) = inv_sqrt2 * sd * std::conj(u(i, j));
      minus(idx4(0, 0, i, j, d), 0) = inv_sqrt2;
      minus(idx4(1, 1, j, i, d), 0) = -inv_sqrt2 * sd * std::conj(u(i, j));
      bundle.nonzero_kets.push_back({ij_label("v", i, j), lambda_v, std::move(plus)});
      bundle.zero_kets.push_back({ij_label("v-", i, j), 0.0, std::move(minus)});
    }
    ComplexMatrix wplus(n, 1), wminus(n, 1);
    wplus(idx4(0, 1, i, i, d), 0) = inv_sqrt2;
    wminus(idx4(0, 1, i, i, d), 0) = inv_sqrt2;
    for (std::size_t j = 0; j < d; ++j) {
      wplus(idx4(1, 0, j, j, d), 0) += inv_sqrt2 * std::conj(u(i, j));
      wminus(idx4(1, 0, j, j, d), 0) -= inv_sqrt2 * std::conj(u(i, j));
    }
    bundle.nonzero_kets.push_back({i_label("w", i), lambda_w, std::move(wplus)});
    bundle.zero_kets.push_back({i_label("w-", i), 0.0, std::move(wminus)});
  }

  apply_order(bundle, order);
  return bundle;
}

namespace {

// Groups the q vectors (coefficients over |10kk>) of a candidate Q family and
// fills the derived fields. Throws if the matrices do not have the structure
// the construction requires.
void analyze_q_family(QFamily& fam) {
  const std::size_t d = fam.d;
  constexpr double kZeroTol = 1e-12;

  fam.xi_sets.clear();
  fam.qbar_basis.clear();
  fam.s_factors.assign(d, std::vector<double>(d, 0.0));

  // q_ij[k] = Q^k(i,j); the vectors must be exactly reused rays.
  std::vector<std::vector<double>> groups_rep;  // unnormalized representative
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<double> q(d);
      double norm2 = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        q[k] = fam.q_mats[k](i, j).real();
        norm2 += q[k] * q[k];
      }
      const double norm = std::sqrt(norm2);
      if (norm <= kZeroTol) continue;

      bool placed = false;
      for (std::size_t m = 0; m < groups_rep.size(); ++m) {
        double dot = 0.0, rep_norm2 = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
          dot += groups_rep[m][k] * q[k];
          rep_norm2 += groups_rep[m][k] * groups_rep[m][k];
        }
        const double cos = dot / (std::sqrt(rep_norm2) * norm);
        if (std::abs(std::abs(cos) - 1.0) <= 1e-10) {
          fam.xi_sets[m].push_back({i, j});
          fam.s_factors[i][j] = (cos > 0.0 ? norm : -norm);
          placed = true;
          break;
        }
        if (std::abs(cos) > 1e-10)
          throw DomainError("q family: vectors are neither parallel nor orthogonal");
      }
      if (!placed) {
        groups_rep.push_back(q);
        fam.xi_sets.push_back({{i, j}});
        fam.s_factors[i][j] = norm;
      }
    }
  }

  if (groups_rep.size() != d)
    throw DomainError("q family: expected exactly " + std::to_string(d) +
                      " orthogonal rays, found " + std::to_string(groups_rep.size()));

  fam.n_counts.resize(d);
  fam.d_consts.resize(d);
  for (std::size_t m = 0; m < d; ++m) {
    fam.n_counts[m] = fam.xi_sets[m].size();
    fam.d_consts[m] = std::sqrt(static_cast<double>(d) / static_cast<double>(fam.n_counts[m]));
    // Every member of the group must sit at +-D_m.
    for (auto [i, j] : fam.xi_sets[m]) {
      if (std::abs(std::abs(fam.s_factors[i][j]) - fam.d_consts[m]) > 1e-12)
        throw DomainError("q family: member norm differs from D_m");
    }
    double rep_norm = 0.0;
    for (double x : groups_rep[m]) rep_norm += x * x;
    rep_norm = std::sqrt(rep_norm);
    ComplexMatrix qbar(d, 1);
    for (std::size_t k = 0; k < d; ++k) qbar(k, 0) = groups_rep[m][k] / rep_norm;
    fam.qbar_basis.push_back(std::move(qbar));
  }
}

}  // namespace

QFamily q_family_d3(double phi0) {
  QFamily fam;
  fam.kind = QFamily::Kind::D3Rotations;
  fam.d = 3;
  fam.phi0 = phi0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double phi = 2.0 * M_PI * static_cast<double>(k) / 3.0 + phi0;
    ComplexMatrix q(3, 3);
    q(0, 0) = std::cos(phi);
    q(0, 1) = std::sin(phi);
    q(1, 0) = std::sin(phi);
    q(1, 1) = -std::cos(phi);
    q(2, 2) = 1.0;
    fam.q_mats.push_back(std::move(q));
  }
  analyze_q_family(fam);
  return fam;
}

QFamily p_family(std::size_t n) {
  if (n < 1) throw DomainError("p_family: n must be >= 1");
  const std::size_t d = std::size_t{1} << n;

  QFamily fam;
  fam.kind = QFamily::Kind::PowerOfTwoPermutations;
  fam.d = d;

  // Recursive block construction; matrix k is the tensor product of identity
  // and bit-flip factors selected by the complemented bits of k.
  std::vector<ComplexMatrix> mats = {ComplexMatrix::identity(1)};
  for (std::size_t level = 0; level < n; ++level) {
    const std::size_t half = mats.size();
    std::vector<ComplexMatrix> next(2 * half);
    for (std::size_t k = 0; k < half; ++k) {
      const ComplexMatrix& b = mats[k];
      const std::size_t bn = b.rows();
      ComplexMatrix diag(2 * bn, 2 * bn), anti(2 * bn, 2 * bn);
      for (std::size_t r = 0; r < bn; ++r)
        for (std::size_t c = 0; c < bn; ++c) {
          diag(r, c) = b(r, c);
          diag(bn + r, bn + c) = b(r, c);
          anti(r, bn + c) = b(r, c);
          anti(bn + r, c) = b(r, c);
        }
      next[k] = std::move(diag);
      next[k + half] = std::move(anti);
    }
    mats = std::move(next);
  }
  fam.q_mats = std::move(mats);
  analyze_q_family(fam);
  return fam;
}

std::vector<ComplexMatrix> t_kets(const QFamily& fam) {
  const std::size_t d = fam.d;
  const std::size_t n = 4 * d * d;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexMatrix> ts;
  ts.reserve(d);
  for (std::size_t m = 0; m < d; ++m) {
    ComplexMatrix t(n, 1);
    for (auto [i, j] : fam.xi_sets[m]) t(idx4(0, 1, i, j, d), 0) = scale * fam.s_factors[i][j];
    ts.push_back(std::move(t));
  }
  return ts;
}

std::vector<ComplexMatrix> s_kets(const QFamily& fam) {
  if (fam.kind == QFamily::Kind::PowerOfTwoPermutations) return t_kets(fam);

  // d = 3: explicit vectors in the |01> sector.
  const std::size_t d = 3;
  const std::size_t n = 4 * d * d;
  const double r = M_SQRT1_2;
  ComplexMatrix s0(n, 1), s1(n, 1), s2(n, 1);
  s0(idx4(0, 1, 0, 0, d), 0) = r;
  s0(idx4(0, 1, 1, 1, d), 0) = r;
  s1(idx4(0, 1, 0, 1, d), 0) = r;
  s1(idx4(0, 1, 1, 0, d), 0) = -r;
  s2(idx4(0, 1, 2, 2, d), 0) = 1.0;
  return {std::move(s0), std::move(s1), std::move(s2)};
}

StateBundle build_rho_f2(std::size_t d, const QFamily& fam, SubsystemOrder order) {
  if (fam.d != d) throw DimensionError("build_rho_f2: family dimension mismatch");
  const std::size_t n = 4 * d * d;
  const double p1 = p1_weight(d), p2 = p2_weight(d);
  const double lambda_z = p1 / static_cast<double>(d * d);
  const double lambda_s = p2 / (2.0 * static_cast<double>(d));

  StateBundle bundle;
  bundle.dims = SubsystemDims::key_shield(d);
  bundle.family = "f2";
  ComplexMatrix rho(n, n);

  const double inv_sqrt2 = M_SQRT1_2;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix z(n, 1), zminus(n, 1);
      z(idx4(0, 0, i, j, d), 0) = inv_sqrt2;
      zminus(idx4(0, 0, i, j, d), 0) = inv_sqrt2;
      for (std::size_t k = 0; k < d; ++k) {
        const double qik = fam.q_mats[j](i, k).real();
        if (qik == 0.0) continue;
        z(idx4(1, 1, j, k, d), 0) += inv_sqrt2 * qik;
        zminus(idx4(1, 1, j, k, d), 0) -= inv_sqrt2 * qik;
      }
      rho += lambda_z * outer(z);
      bundle.nonzero_kets.push_back({ij_label("z", i, j), lambda_z, std::move(z)});
      bundle.zero_kets.push_back({ij_label("z-", i, j), 0.0, std::move(zminus)});
    }
  }
  const auto svecs = s_kets(fam);
  for (std::size_t i = 0; i < d; ++i) {
    rho += lambda_s * outer(svecs[i]);
    bundle.nonzero_kets.push_back({i_label("s", i), lambda_s, svecs[i]});
    ComplexMatrix b = basis_ket(n, idx4(1, 0, i, i, d));
    rho += lambda_s * outer(b);
    bundle.nonzero_kets.push_back({i_label("k10", i), lambda_s, std::move(b)});
  }

  bundle.rho = rho.hermitized();
  apply_order(bundle, order);
  return bundle;
}

StateBundle build_rho_f2(std::size_t d, SubsystemOrder order) {
  if (d == 3) return build_rho_f2(d, q_family_d3(), order);
  if (d >= 2 && is_power_of_two(d)) return build_rho_f2(d, p_family(log2_exact(d)), order);
  throw UnsupportedDimensionError(
      "build_rho_f2: d = " + std::to_string(d) +
      " is not supported; supported dimensions are 3 and powers of two (2, 4, 8, ...)");
}

StateBundle build_rho_4x4() {
  const std::size_t n = 16;
  const double r = M_SQRT1_2;
  auto at = [](std::size_t m, std::size_t k) { return 4 * m + k; };

  std::vector<ComplexMatrix> psi(6, ComplexMatrix(n, 1));
  psi[0](at(0, 1), 0) = r;
  psi[0](at(2, 3), 0) = r;
  psi[1](at(1, 0), 0) = r;
  psi[1](at(3, 2), 0) = r;
  psi[2](at(1, 1), 0) = r;
  psi[2](at(2, 2), 0) = r;
  psi[3](at(0, 0), 0) = r;
  psi[3](at(3, 3), 0) = -r;
  psi[4](at(0, 3), 0) = 0.5;
  psi[4](at(1, 2), 0) = 0.5;
  psi[4](at(2, 1), 0) = r;
  psi[5](at(0, 3), 0) = -0.5;
  psi[5](at(1, 2), 0) = 0.5;
  psi[5](at(3, 0), 0) = r;

  const double q = (std::sqrt(2.0) - 1.0) / 2.0;
  const double p = (1.0 - 2.0 * q) / 4.0;

  StateBundle bundle;
  bundle.dims = SubsystemDims::bipartite(4, 4);
  bundle.family = "4x4";
  ComplexMatrix rho(n, n);
  for (std::size_t k = 0; k < 4; ++k) {
    rho += p * outer(psi[k]);
    bundle.nonzero_kets.push_back({i_label("psi", k + 1), p, psi[k]});
  }
  for (std::size_t k = 4; k < 6; ++k) {
    rho += q * outer(psi[k]);
    bundle.nonzero_kets.push_back({i_label("psi", k + 1), q, psi[k]});
  }
  bundle.rho = rho.hermitized();
  return bundle;
}

ComplexMatrix build_private_bit(const ComplexMatrix& x) {
  if (!x.is_square()) throw DimensionError("build_private_bit: shield operator must be square");
  const std::size_t k = x.rows();

  // Unit trace norm, checked through the singular values of x.
  const EigenSystem xs = hermitian_eig(x.adjoint() * x);
  double trace_norm = 0.0;
  for (double l : xs.eigenvalues) trace_norm += std::sqrt(std::max(0.0, l));
  if (std::abs(trace_norm - 1.0) > 1e-8)
    throw DomainError("build_private_bit: shield operator trace norm is " +
                      std::to_string(trace_norm) + ", expected 1");

  const ComplexMatrix sqrt_xxd = hermitian_sqrt(x * x.adjoint());
  const ComplexMatrix sqrt_xdx = hermitian_sqrt(x.adjoint() * x);
  const ComplexMatrix xd = x.adjoint();

  ComplexMatrix out(4 * k, 4 * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      out(r, c) = 0.5 * sqrt_xxd(r, c);
      out(r, 3 * k + c) = 0.5 * x(r, c);
      out(3 * k + r, c) = 0.5 * xd(r, c);
      out(3 * k + r, 3 * k + c) = 0.5 * sqrt_xdx(r, c);
    }
  return out.hermitized();
}

ComplexMatrix private_bit_x(std::size_t d, UnitaryKind kind) {
  const ComplexMatrix u = unitary_for(d, kind);
  const double scale = 1.0 / (static_cast<double>(d) * std::sqrt(static_cast<double>(d)));
  ComplexMatrix x(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) x(i * d + j, j * d + i) = scale * u(i, j);
  return x;
}

ComplexMatrix private_bit_y(std::size_t d, UnitaryKind kind) {
  const ComplexMatrix u = unitary_for(d, kind);
  const double scale = 1.0 / static_cast<double>(d);
  ComplexMatrix y(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) y(i * d + i, j * d + j) = scale * u(i, j);
  return y;
}

ComplexMatrix f1_from_private_bits(std::size_t d, UnitaryKind kind) {
  const ComplexMatrix rho_x = build_private_bit(private_bit_x(d, kind));
  const ComplexMatrix rho_y = build_private_bit(private_bit_y(d, kind));

  // Key bit flip on B moves rho(Y) onto the 01/10 sector. (Flipping A instead
  // lands Y-adjoint in the wrong block for non-Hermitian u.)
  ComplexMatrix sx(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const ComplexMatrix flip_b =
      kron(ComplexMatrix::identity(2), kron(sx, ComplexMatrix::identity(d * d)));
  const ComplexMatrix rho_prime = flip_b * rho_y * flip_b;

  return (p1_weight(d) * rho_x + p2_weight(d) * rho_prime).hermitized();
}

ComplexMatrix hamiltonian_h(std::size_t d) {
  if (d < 1) throw DomainError("hamiltonian_h: d must be >= 1");
  const std::size_t n = 4 * d * d;
  ComplexMatrix h(n, n);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const double val = (a == 0 ? 1.0 : -1.0) + (b == 0 ? 1.0 : -1.0);
      if (val == 0.0) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const std::size_t e = idx4(a, b, i, j, d);
          h(e, e) = val;
        }
    }
  return h;
}

ComplexMatrix hamiltonian_4x4() {
  ComplexMatrix h(16, 16);
  const double dvals[4] = {1.0, 1.0, -1.0, -1.0};
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t k = 0; k < 4; ++k) h(4 * m + k, 4 * m + k) = dvals[m] + dvals[k];
  return h;
}

ComplexMatrix hamiltonian_for(const SubsystemDims& dims) {
  if (dims.count() == 4) {
    const std::size_t pa = dims.index_of(Subsystem::A);
    const std::size_t pb = dims.index_of(Subsystem::B);
    if (dims.dims[pa] != 2 || dims.dims[pb] != 2)
      throw DomainError("hamiltonian_for: key subsystems must be qubits");
    const std::size_t n = dims.total_dim();
    const auto strides = subsystem_strides(dims.dims);
    ComplexMatrix h(n, n);
    std::vector<std::size_t> digits;
    for (std::size_t e = 0; e < n; ++e) {
      decompose_index(e, dims.dims, strides, digits);
      const double val = (digits[pa] == 0 ? 1.0 : -1.0) + (digits[pb] == 0 ? 1.0 : -1.0);
      h(e, e) = val;
    }
    return h;
  }
  if (dims.count() == 2 && dims.dims[0] == 4 && dims.dims[1] == 4) return hamiltonian_4x4();
  throw DomainError("hamiltonian_for: no default Hamiltonian for this factorization");
}

std::pair<ComplexMatrix, ComplexMatrix> hamiltonian_local_terms(const SubsystemDims& dims) {
  ComplexMatrix sz(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  if (dims.count() == 4) {
    const std::size_t dp = dims.dims[dims.index_of(Subsystem::APrime)];
    const ComplexMatrix local = kron(sz, ComplexMatrix::identity(dp));
    return {local, local};
  }
  if (dims.count() == 2 && dims.dims[0] == 4 && dims.dims[1] == 4) {
    ComplexMatrix dmat(4, 4);
    dmat(0, 0) = 1.0;
    dmat(1, 1) = 1.0;
    dmat(2, 2) = -1.0;
    dmat(3, 3) = -1.0;
    return {dmat, dmat};
  }
  throw DomainError("hamiltonian_local_terms: no default split for this factorization");
}

ComplexMatrix white_noise_mix(const ComplexMatrix& rho, double p) {
  if (!rho.is_square()) throw DimensionError("white_noise_mix: matrix is not square");
  if (p < 0.0 || p > 1.0)
    throw DomainError("white_noise_mix: p must lie in [0,1], got " + std::to_string(p));
  const std::size_t n = rho.rows();
  ComplexMatrix out = p * rho;
  const double off = (1.0 - p) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) += off;
  return out;
}

ComplexMatrix reorder_subsystems(const ComplexMatrix& rho, const SubsystemDims& dims,
                                 const std::vector<std::size_t>& perm) {
  if (!rho.is_square() || rho.rows() != dims.total_dim())
    throw DimensionError("reorder_subsystems: dims do not match matrix");
  return permute_matrix(rho, index_permutation(dims, perm));
}

ComplexMatrix flip_operator(const SubsystemDims& dims) {
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  if (dims.count() == 4) {
    swaps.push_back({dims.index_of(Subsystem::A), dims.index_of(Subsystem::B)});
    swaps.push_back({dims.index_of(Subsystem::APrime), dims.index_of(Subsystem::BPrime)});
  } else if (dims.count() == 2) {
    swaps.push_back({0, 1});
  } else {
    throw DomainError("flip_operator: expected 2 or 4 subsystems");
  }
  for (auto [x, y] : swaps)
    if (dims.dims[x] != dims.dims[y])
      throw DimensionError("flip_operator: paired subsystems have different dimensions");

  const std::size_t n = dims.total_dim();
  const auto strides = subsystem_strides(dims.dims);
  ComplexMatrix f(n, n);
  std::vector<std::size_t> digits;
  for (std::size_t e = 0; e < n; ++e) {
    decompose_index(e, dims.dims, strides, digits);
    for (auto [x, y] : swaps) std::swap(digits[x], digits[y]);
    f(compose_index(digits, strides), e) = 1.0;
  }
  return f;
}

SymSplit sym_antisym_split(const ComplexMatrix& rho, const SubsystemDims& dims) {
  const ComplexMatrix f = flip_operator(dims);
  const double residual = frobenius_distance(f * rho * f, rho);
  if (residual > 1e-10)
    throw DomainError("sym_antisym_split: state is not flip invariant (residual " +
                      std::to_string(residual) + ")");

  const std::size_t n = rho.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const ComplexMatrix proj_plus = 0.5 * (eye + f);
  const ComplexMatrix proj_minus = 0.5 * (eye - f);

  ComplexMatrix sym = (proj_plus * rho * proj_plus).hermitized();
  ComplexMatrix anti = (proj_minus * rho * proj_minus).hermitized();
  const double w = sym.trace().real();

  SymSplit split;
  split.symmetric_weight = w;
  split.symmetric = w > 1e-12 ? (1.0 / w) * sym : sym;
  split.antisymmetric = (1.0 - w) > 1e-12 ? (1.0 / (1.0 - w)) * anti : anti;
  return split;
}

ComplexMatrix relabel_key_shield_to_4x4(const ComplexMatrix& m) {
  if (m.rows() != 16 || (m.cols() != 16 && m.cols() != 1))
    throw DimensionError("relabel_key_shield_to_4x4: expected a 16 x 16 matrix or a 16-ket");
  // Two-bit pair -> ququart digit: 00->1, 01->0, 10->2, 11->3.
  const std::size_t pair_map[4] = {1, 0, 2, 3};
  std::vector<std::size_t> map(16);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          map[idx4(a, b, i, j, 2)] = 4 * pair_map[2 * b + j] + pair_map[2 * a + i];
  return m.cols() == 1 ? permute_ket(m, map) : permute_matrix(m, map);
}

ComplexMatrix maximally_entangled_probe(std::size_t d) {
  ComplexMatrix phi(4, 1);
  phi(0, 0) = M_SQRT1_2;  // |00>
  phi(3, 0) = M_SQRT1_2;  // |11>
  const double scale = 1.0 / static_cast<double>(d * d);
  return kron(outer(phi), scale * ComplexMatrix::identity(d * d));
}

}  // namespace pptmetro
