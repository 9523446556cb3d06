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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "pptmetro/linalg.hpp"
#include "pptmetro/states.hpp"

using namespace pptmetro;

namespace {

const std::vector<Subsystem> kGamma = {Subsystem::B, Subsystem::BPrime};

std::vector<double> sorted_spectrum(const ComplexMatrix& m) {
  auto ev = hermitian_eig(m).eigenvalues;
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

double bundle_eigvec_residual(const StateBundle& b) {
  double worst = 0.0;
  for (const auto& kets : {b.nonzero_kets, b.zero_kets})
    for (const LabeledKet& k : kets)
      worst = std::max(worst, ket_norm(b.rho * k.ket - k.eigenvalue * k.ket));
  return worst;
}

}  // namespace

TEST_CASE("fourier unitary") {
  CHECK(fourier_unitary(1)(0, 0) == Complex(1.0, 0.0));

  const ComplexMatrix f2 = fourier_unitary(2);
  CHECK(std::abs(f2(0, 0) - Complex(M_SQRT1_2, 0.0)) < 1e-15);
  CHECK(std::abs(f2(1, 1) - Complex(-M_SQRT1_2, 0.0)) < 1e-15);

  const ComplexMatrix f3 = fourier_unitary(3);
  const double mod = 1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(std::abs(f3(i, j)) - mod) < 1e-15);
  CHECK(frobenius_distance(f3.adjoint() * f3, ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("hadamard unitary") {
  const ComplexMatrix h1 = hadamard_unitary(1);
  CHECK(h1(0, 0).real() == doctest::Approx(M_SQRT1_2));
  CHECK(h1(1, 1).real() == doctest::Approx(-M_SQRT1_2));

  const ComplexMatrix h2 = hadamard_unitary(2);
  CHECK(frobenius_distance(h2 * h2.transpose(), ComplexMatrix::identity(4)) < 1e-12);
  CHECK(max_abs_diff(h2, h2.transpose()) == 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(std::abs(h2(i, j)) - 0.5) < 1e-15);
}

TEST_CASE("first family at d=2 has the documented spectrum") {
  const StateBundle b = build_rho_f1({2, UnitaryKind::Hadamard});
  const double lv = (std::sqrt(2.0) - 1.0) / (2.0 * std::sqrt(2.0));
  const double lw = (std::sqrt(2.0) - 1.0) / 2.0;
  const auto ev = sorted_spectrum(b.rho);
  for (int k = 0; k < 2; ++k) CHECK(ev[k] == doctest::Approx(lw).epsilon(1e-12));
  for (int k = 2; k < 6; ++k) CHECK(ev[k] == doctest::Approx(lv).epsilon(1e-12));
  for (int k = 6; k < 16; ++k) CHECK(std::abs(ev[k]) < 1e-14);
}

TEST_CASE("first family basics across d") {
  for (std::size_t d : {2, 3, 5}) {
    const StateBundle b = build_rho_f1({d, UnitaryKind::Fourier});
    CHECK(std::abs(b.rho.trace().real() - 1.0) < 1e-12);
    CHECK(is_psd(b.rho));
    CHECK(bundle_eigvec_residual(b) < 1e-10);
    CHECK(b.nonzero_kets.size() == d * d + d);
  }
}

TEST_CASE("first family is invariant under partial transposition") {
  const StateBundle b = build_rho_f1({3, UnitaryKind::Fourier});
  CHECK(matrix_rank(b.rho) == 12);
  const ComplexMatrix gamma = partial_transpose(b.rho, b.dims, kGamma);
  CHECK(max_abs_diff(gamma, b.rho) < 1e-14);
}

TEST_CASE("hadamard unitary demands a power of two") {
  CHECK_THROWS_AS(build_rho_f1({3, UnitaryKind::Hadamard}), DomainError);
}

TEST_CASE("hamiltonian acts as +2 / 0 / 0 / -2 on the key sectors") {
  const std::size_t d = 3;
  const ComplexMatrix h = hamiltonian_h(d);
  auto at = [d](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
    return ((a * 2 + b) * d + i) * d + j;
  };
  CHECK(h(at(0, 0, 1, 2), at(0, 0, 1, 2)).real() == 2.0);
  CHECK(h(at(0, 1, 0, 2), at(0, 1, 0, 2)).real() == 0.0);
  CHECK(h(at(1, 0, 2, 2), at(1, 0, 2, 2)).real() == 0.0);
  CHECK(h(at(1, 1, 0, 0), at(1, 1, 0, 0)).real() == -2.0);
  CHECK(std::abs(h.trace()) == 0.0);
}

TEST_CASE("hamiltonian maps plus kets to twice the minus kets") {
  for (std::size_t d : {2, 3}) {
    const ComplexMatrix h = hamiltonian_h(d);
    for (const StateBundle& b :
         {build_rho_f1({d, UnitaryKind::Fourier}), build_rho_f2(d)}) {
      for (std::size_t k = 0; k < b.zero_kets.size(); ++k) {
        const LabeledKet& minus = b.zero_kets[k];
        std::string partner = minus.label;
        partner.erase(partner.find('-'), 1);
        for (const LabeledKet& plus : b.nonzero_kets) {
          if (plus.label != partner) continue;
          if (partner[0] == 'v' || partner[0] == 'z') {
            CHECK(ket_norm(h * plus.ket - 2.0 * minus.ket) < 1e-12);
          } else {
            CHECK(ket_norm(h * minus.ket) < 1e-12);
          }
        }
      }
      // w_i / s_i / |10ii> are annihilated.
      for (const LabeledKet& k2 : b.nonzero_kets) {
        if (k2.label[0] == 'v' || k2.label[0] == 'z') continue;
        CHECK(ket_norm(h * k2.ket) < 1e-12);
      }
    }
  }
}

TEST_CASE("d=3 rotation family relations") {
  const QFamily fam = q_family_d3();
  CHECK(fam.n_counts == std::vector<std::size_t>{2, 2, 1});
  CHECK(fam.d_consts[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
  CHECK(fam.d_consts[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

  // q_00 = -q_11 = sum_k cos(phi_k)|10kk>.
  for (std::size_t k = 0; k < 3; ++k) {
    const double phi = 2.0 * M_PI * double(k) / 3.0;
    CHECK(fam.q_mats[k](0, 0).real() == doctest::Approx(std::cos(phi)).epsilon(1e-14));
    CHECK(fam.q_mats[k](1, 1).real() == doctest::Approx(-std::cos(phi)).epsilon(1e-14));
  }
  CHECK(fam.s_factors[0][0] == doctest::Approx(std::sqrt(1.5)));
  CHECK(fam.s_factors[1][1] == doctest::Approx(-std::sqrt(1.5)));
  CHECK(fam.s_factors[0][1] == doctest::Approx(fam.s_factors[1][0]));

  // Orthonormal qbar basis and the consistency sum over all q vectors.
  double sum = 0.0;
  for (std::size_t m = 0; m < 3; ++m) {
    sum += double(fam.n_counts[m]) * fam.d_consts[m] * fam.d_consts[m];
    for (std::size_t l = 0; l < 3; ++l) {
      const double expect = m == l ? 1.0 : 0.0;
      CHECK(std::abs(inner(fam.qbar_basis[m], fam.qbar_basis[l]) - Complex(expect, 0.0)) <
            1e-12);
    }
  }
  CHECK(sum == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("derived quantities do not depend on the free angle") {
  const StateBundle a = build_rho_f2(3, q_family_d3(0.0));
  const StateBundle b = build_rho_f2(3, q_family_d3(0.37));
  const auto ev_a = sorted_spectrum(a.rho), ev_b = sorted_spectrum(b.rho);
  for (std::size_t k = 0; k < ev_a.size(); ++k) CHECK(std::abs(ev_a[k] - ev_b[k]) < 1e-12);
  const ComplexMatrix gb = partial_transpose(b.rho, b.dims, kGamma);
  CHECK(is_psd(gb));
  CHECK(std::abs(b.rho.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("permutation family base case and ordering") {
  const QFamily base = p_family(1);
  CHECK(max_abs_diff(base.q_mats[0], ComplexMatrix::identity(2)) == 0.0);
  ComplexMatrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  CHECK(max_abs_diff(base.q_mats[1], x) == 0.0);

  // n=3 ordering: matrix k is the tensor product selected by the bits of k,
  // built here independently through kron.
  const QFamily fam = p_family(3);
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  for (std::size_t k = 0; k < 8; ++k) {
    const ComplexMatrix f2 = (k & 4) ? x : i2;
    const ComplexMatrix f1 = (k & 2) ? x : i2;
    const ComplexMatrix f0 = (k & 1) ? x : i2;
    CHECK(max_abs_diff(fam.q_mats[k], kron(f2, kron(f1, f0))) == 0.0);
  }
}

TEST_CASE("permutation family covers every position exactly once") {
  for (std::size_t n : {1, 2, 3}) {
    const QFamily fam = p_family(n);
    const std::size_t d = fam.d;
    ComplexMatrix sum(d, d);
    for (const ComplexMatrix& p : fam.q_mats) sum += p;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) CHECK(sum(r, c) == Complex(1.0, 0.0));
    CHECK(fam.n_counts == std::vector<std::size_t>(d, d));
  }
}

TEST_CASE("second family ranks and spectra") {
  const StateBundle b2 = build_rho_f2(2);
  CHECK(matrix_rank(b2.rho) == 8);
  CHECK(matrix_rank(partial_transpose(b2.rho, b2.dims, kGamma)) == 10);

  const StateBundle b3 = build_rho_f2(3);
  const double p1 = p1_weight(3), p2 = p2_weight(3);
  const auto gev = sorted_spectrum(partial_transpose(b3.rho, b3.dims, kGamma));
  for (int k = 0; k < 3; ++k) CHECK(gev[k] == doctest::Approx(p2 / 3.0).epsilon(1e-12));
  for (int k = 3; k < 21; ++k) CHECK(gev[k] == doctest::Approx(p1 / 18.0).epsilon(1e-12));
  for (std::size_t k = 21; k < gev.size(); ++k) CHECK(std::abs(gev[k]) < 1e-12);
}

TEST_CASE("second family at d=4 is a PPT density matrix") {
  const StateBundle b = build_rho_f2(4);
  CHECK(std::abs(b.rho.trace().real() - 1.0) < 1e-12);
  CHECK(is_psd(b.rho));
  CHECK(is_psd(partial_transpose(b.rho, b.dims, kGamma)));
  CHECK(bundle_eigvec_residual(b) < 1e-10);
}

TEST_CASE("second family rejects unsupported dimensions") {
  CHECK_THROWS_AS(build_rho_f2(5), UnsupportedDimensionError);
  CHECK_THROWS_WITH_AS(build_rho_f2(7), doctest::Contains("powers of two"),
                       UnsupportedDimensionError);
}

TEST_CASE("two-ququart state") {
  const StateBundle b = build_rho_4x4();
  const double q = (std::sqrt(2.0) - 1.0) / 2.0;
  const double p = (1.0 - 2.0 * q) / 4.0;
  CHECK(std::abs(b.rho.trace().real() - (4.0 * p + 2.0 * q)) < 1e-15);
  CHECK(std::abs(b.rho.trace().real() - 1.0) < 1e-14);

  const ComplexMatrix f = flip_operator(b.dims);
  CHECK(max_abs_diff(f * b.rho * f, b.rho) < 1e-14);
  CHECK(bundle_eigvec_residual(b) < 1e-12);
}

TEST_CASE("private bit with trivial shield is the maximally entangled pair") {
  const ComplexMatrix x = ComplexMatrix::identity(1);
  const ComplexMatrix bit = build_private_bit(x);
  ComplexMatrix phi(4, 1);
  phi(0, 0) = M_SQRT1_2;
  phi(3, 0) = M_SQRT1_2;
  CHECK(max_abs_diff(bit, outer(phi)) < 1e-15);
}

TEST_CASE("private bit from the shield operator is a state") {
  const ComplexMatrix x = private_bit_x(3, UnitaryKind::Fourier);
  const ComplexMatrix bit = build_private_bit(x);
  CHECK(std::abs(bit.trace().real() - 1.0) < 1e-12);
  CHECK(is_psd(bit));
}

TEST_CASE("private bit rejects shields without unit trace norm") {
  CHECK_THROWS_AS(build_private_bit(2.0 * ComplexMatrix::identity(2)), DomainError);
}

TEST_CASE("private-bit mixture equals the direct construction") {
  CHECK(max_abs_diff(f1_from_private_bits(2, UnitaryKind::Hadamard),
                     build_rho_f1({2, UnitaryKind::Hadamard}).rho) < 1e-12);
  CHECK(max_abs_diff(f1_from_private_bits(3, UnitaryKind::Fourier),
                     build_rho_f1({3, UnitaryKind::Fourier}).rho) < 1e-12);
}

TEST_CASE("two-ququart hamiltonian") {
  const ComplexMatrix h = hamiltonian_4x4();
  const auto ev = sorted_spectrum(h);
  CHECK(ev.front() == doctest::Approx(2.0));
  CHECK(ev.back() == doctest::Approx(-2.0));
  for (double l : ev) CHECK((std::abs(l - 2.0) < 1e-12 || std::abs(l) < 1e-12 ||
                             std::abs(l + 2.0) < 1e-12));

  // The ququart relabeling carries the key Hamiltonian onto it.
  CHECK(max_abs_diff(relabel_key_shield_to_4x4(hamiltonian_h(2)), h) == 0.0);
}

TEST_CASE("white noise mixing") {
  const StateBundle b = build_rho_f1({2, UnitaryKind::Fourier});
  CHECK(max_abs_diff(white_noise_mix(b.rho, 1.0), b.rho) == 0.0);
  CHECK(max_abs_diff(white_noise_mix(b.rho, 0.0), (1.0 / 16.0) * ComplexMatrix::identity(16)) <
        1e-15);

  const double p = 0.4;
  const auto base = sorted_spectrum(b.rho);
  const auto noisy = sorted_spectrum(white_noise_mix(b.rho, p));
  for (std::size_t k = 0; k < base.size(); ++k)
    CHECK(noisy[k] == doctest::Approx(p * base[k] + (1.0 - p) / 16.0).epsilon(1e-10));

  CHECK_THROWS_AS(white_noise_mix(b.rho, 1.5), DomainError);
}

TEST_CASE("subsystem reordering round trips and relabels") {
  const StateBundle b = build_rho_f1({2, UnitaryKind::Hadamard});
  const std::vector<std::size_t> identity_perm = {0, 1, 2, 3};
  CHECK(max_abs_diff(reorder_subsystems(b.rho, b.dims, identity_perm), b.rho) == 0.0);

  const std::vector<std::size_t> to_grouped = {0, 2, 1, 3};
  const ComplexMatrix grouped = reorder_subsystems(b.rho, b.dims, to_grouped);
  const SubsystemDims gdims = b.dims.permuted(to_grouped);
  // The same permutation is its own inverse here.
  CHECK(max_abs_diff(reorder_subsystems(grouped, gdims, to_grouped), b.rho) == 0.0);

  // Grouped order must agree with the constructor's own AABB output.
  const StateBundle direct = build_rho_f1({2, UnitaryKind::Hadamard}, SubsystemOrder::AABB);
  CHECK(max_abs_diff(grouped, direct.rho) == 0.0);

  CHECK(max_abs_diff(relabel_key_shield_to_4x4(b.rho), build_rho_4x4().rho) < 1e-12);
}

TEST_CASE("flip operator") {
  const SubsystemDims dims = SubsystemDims::key_shield(3);
  const ComplexMatrix f = flip_operator(dims);
  CHECK(max_abs_diff(f * f, ComplexMatrix::identity(36)) == 0.0);

  const StateBundle had = build_rho_f1({2, UnitaryKind::Hadamard});
  const ComplexMatrix f2 = flip_operator(had.dims);
  CHECK(max_abs_diff(f2 * had.rho * f2, had.rho) < 1e-14);

  const StateBundle fou = build_rho_f1({3, UnitaryKind::Fourier});
  const ComplexMatrix f3 = flip_operator(fou.dims);
  CHECK(frobenius_distance(f3 * fou.rho * f3, fou.rho) > 1e-3);

  CHECK_THROWS_AS(flip_operator(SubsystemDims::bipartite(2, 3)), DimensionError);
}

TEST_CASE("symmetric/antisymmetric split") {
  const StateBundle b = build_rho_f1({2, UnitaryKind::Hadamard});
  const SymSplit split = sym_antisym_split(b.rho, b.dims);

  CHECK(std::abs(split.symmetric.trace().real() - 1.0) < 1e-12);
  CHECK(std::abs(split.antisymmetric.trace().real() - 1.0) < 1e-12);
  CHECK(is_psd(split.symmetric));
  CHECK(is_psd(split.antisymmetric));

  // Weighted recombination and support purity.
  const ComplexMatrix recombined = split.symmetric_weight * split.symmetric +
                                   (1.0 - split.symmetric_weight) * split.antisymmetric;
  CHECK(max_abs_diff(recombined, b.rho) < 1e-12);

  const ComplexMatrix f = flip_operator(b.dims);
  const ComplexMatrix pm = 0.5 * (ComplexMatrix::identity(16) - f);
  const ComplexMatrix pp = 0.5 * (ComplexMatrix::identity(16) + f);
  CHECK((pm * split.symmetric * pm).frobenius_norm() < 1e-12);
  CHECK((pp * split.antisymmetric * pp).frobenius_norm() < 1e-12);

  // Non-invariant input is refused with the residual in the message.
  const StateBundle fou = build_rho_f1({3, UnitaryKind::Fourier});
  CHECK_THROWS_WITH_AS(sym_antisym_split(fou.rho, fou.dims), doctest::Contains("residual"),
                       DomainError);
}

TEST_CASE("maximally entangled probe") {
  const ComplexMatrix me = maximally_entangled_probe(3);
  CHECK(std::abs(me.trace().real() - 1.0) < 1e-14);
  CHECK(is_psd(me));
  CHECK(matrix_rank(me) == 9);
}
