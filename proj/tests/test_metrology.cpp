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

#include <cmath>

#include "pptmetro/linalg.hpp"
#include "pptmetro/metrology.hpp"
#include "pptmetro/rng.hpp"
#include "pptmetro/states.hpp"

using namespace pptmetro;

namespace {

// 32 - 16 sqrt(2) = 9.372583002030480; kept as the frozen anchor value.
constexpr double kAnchorQfiD2 = 9.372583002030480;

ComplexMatrix sigma_z_local(std::size_t d) {
  ComplexMatrix sz(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  return kron(sz, ComplexMatrix::identity(d));
}

}  // namespace

TEST_CASE("qfi anchor values") {
  const ComplexMatrix h2 = hamiltonian_h(2);
  CHECK(std::abs(qfi(build_rho_f1({2, UnitaryKind::Hadamard}).rho, h2) - kAnchorQfiD2) < 1e-8);
  CHECK(std::abs(kAnchorQfiD2 - (32.0 - 16.0 * std::sqrt(2.0))) < 1e-12);

  // Maximally mixed carries no signal; the two-qubit probe reaches 16.
  CHECK(qfi((1.0 / 16.0) * ComplexMatrix::identity(16), h2) == doctest::Approx(0.0));
  CHECK(std::abs(qfi(maximally_entangled_probe(2), h2) - 16.0) < 1e-8);
  const ComplexMatrix h3 = hamiltonian_h(3);
  CHECK(std::abs(qfi(maximally_entangled_probe(3), h3) - 16.0) < 1e-8);
}

TEST_CASE("both qfi formulas agree on the first family") {
  for (std::size_t d : {2, 3, 4, 5}) {
    const ComplexMatrix rho = build_rho_f1({d, UnitaryKind::Fourier}).rho;
    const ComplexMatrix h = hamiltonian_h(d);
    CHECK(std::abs(qfi(rho, h) - qfi_alt(rho, h)) < 1e-8);
  }
}

TEST_CASE("both qfi formulas agree on random mixed states") {
  Rng rng(97);
  for (int rep = 0; rep < 15; ++rep) {
    const ComplexMatrix rho = random_density_matrix(9, rng);
    const ComplexMatrix h = random_hermitian(9, rng);
    CHECK(std::abs(qfi(rho, h) - qfi_alt(rho, h)) < 1e-8 * std::max(1.0, qfi(rho, h)));
  }
}

TEST_CASE("both qfi formulas give the closed form on the second family at d=3") {
  const ComplexMatrix rho = build_rho_f2(3).rho;
  const ComplexMatrix h = hamiltonian_h(3);
  const double expected = 16.0 * std::sqrt(3.0) / (1.0 + std::sqrt(3.0));
  CHECK(std::abs(qfi(rho, h) - expected) < 1e-8);
  CHECK(std::abs(qfi_alt(rho, h) - expected) < 1e-8);
}

TEST_CASE("pure states saturate the variance bound in the dual form") {
  Rng rng(3);
  const ComplexMatrix h = random_hermitian(6, rng);
  ComplexMatrix psi(6, 1);
  for (std::size_t k = 0; k < 6; ++k) psi(k, 0) = Complex(rng.gaussian(), rng.gaussian());
  psi *= Complex(1.0 / ket_norm(psi), 0.0);
  const ComplexMatrix rho = outer(psi);
  CHECK(std::abs(qfi_alt(rho, h) - 4.0 * variance_of(rho, h)) < 1e-9);
  CHECK(std::abs(qfi(rho, h) - 4.0 * variance_of(rho, h)) < 1e-9);
}

TEST_CASE("qfi never exceeds four variances on random mixed states") {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix rho = random_density_matrix(8, rng);
    const ComplexMatrix h = random_hermitian(8, rng);
    CHECK(qfi(rho, h) <= 4.0 * variance_of(rho, h) + 1e-8);
  }
}

TEST_CASE("separable bound") {
  const ComplexMatrix h1 = sigma_z_local(3);
  CHECK(sep_bound(h1, h1) == doctest::Approx(8.0));
  CHECK(sep_bound(ComplexMatrix(2, 2), ComplexMatrix(2, 2)) == doctest::Approx(0.0));
  CHECK(sep_bound(sigma_z_local(5), ComplexMatrix::zero(4, 4)) == doctest::Approx(4.0));

  // Two-ququart layout: spread 2 per party as well.
  const auto [d1, d2] = hamiltonian_local_terms(SubsystemDims::bipartite(4, 4));
  CHECK(sep_bound(d1, d2) == doctest::Approx(8.0));
}

TEST_CASE("analytic qfi curve") {
  CHECK(std::abs(qfi_f1_analytic(2) - kAnchorQfiD2) < 1e-12);
  CHECK(qfi_f1_analytic(4) == doctest::Approx(32.0 / 3.0).epsilon(1e-14));
  // Monotone toward the flat bound of 16.
  double prev = 0.0;
  for (std::size_t d = 2; d <= 64; ++d) {
    const double f = qfi_f1_analytic(d);
    CHECK(f > prev);
    CHECK(f < 16.0);
    prev = f;
  }
  CHECK(std::abs(16.0 - qfi_f1_analytic(1000000000000ull)) < 1e-4);
}

TEST_CASE("noisy qfi closed form endpoints and numeric agreement") {
  CHECK(qfi_noisy_analytic(3, 1.0) == doctest::Approx(qfi_f1_analytic(3)).epsilon(1e-14));
  CHECK(qfi_noisy_analytic(3, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(qfi_noisy_analytic(3, -0.1), DomainError);

  const ComplexMatrix rho = build_rho_f1({4, UnitaryKind::Fourier}).rho;
  const ComplexMatrix h = hamiltonian_h(4);
  const double numeric = qfi(white_noise_mix(rho, 0.5), h);
  CHECK(std::abs(numeric - qfi_noisy_analytic(4, 0.5)) < 1e-8);
}

TEST_CASE("robustness analytic properties") {
  // Substituting p = 1 - r back into the noisy curve returns the bound.
  for (std::size_t d : {2, 3, 4, 16, 64}) {
    const double r = robustness_analytic(d);
    CHECK(std::abs(qfi_noisy_analytic(d, 1.0 - r) - 8.0) < 1e-10);
  }
  double prev = 0.0;
  for (std::size_t d = 2; d <= 64; ++d) {
    const double r = robustness_analytic(d);
    CHECK(r > prev);
    prev = r;
  }
  // Large-d limit 1 - (1 + sqrt(17))/8 ~ 0.3596, approached from below.
  const double limit = 1.0 - (1.0 + std::sqrt(17.0)) / 8.0;
  CHECK(std::abs(robustness_analytic(1000000000000ull) - limit) < 1e-6);
}

TEST_CASE("robustness bisection matches the closed form") {
  for (std::size_t d : {2, 3}) {
    const ComplexMatrix rho =
        d == 2 ? build_rho_f1({2, UnitaryKind::Hadamard}).rho : build_rho_f2(3).rho;
    const ComplexMatrix h = hamiltonian_h(d);
    CHECK(std::abs(robustness_numeric(rho, h, 8.0) - robustness_analytic(d)) < 1e-6);
  }
}

TEST_CASE("robustness refuses states below the bound") {
  const ComplexMatrix mixed = (1.0 / 16.0) * ComplexMatrix::identity(16);
  CHECK_THROWS_AS(robustness_numeric(mixed, hamiltonian_h(2), 8.0), NotUsefulError);
}

TEST_CASE("sld maximizes the see-saw objective at the qfi") {
  const ComplexMatrix rho = build_rho_f1({2, UnitaryKind::Hadamard}).rho;
  const ComplexMatrix h = hamiltonian_h(2);
  const ComplexMatrix m = sld(rho, h);
  CHECK(m.is_hermitian(1e-12));
  const double objective =
      -real_expectation(rho, m * m) + 2.0 * real_expectation(rho, commutator_i(m, h));
  CHECK(std::abs(objective - qfi(rho, h)) < 1e-8);
}

TEST_CASE("sld of the maximally mixed state vanishes") {
  const ComplexMatrix m = sld((1.0 / 16.0) * ComplexMatrix::identity(16), hamiltonian_h(2));
  CHECK(m.frobenius_norm() < 1e-12);
}

TEST_CASE("error propagation reaches the quantum limit at the sld") {
  const ComplexMatrix rho = build_rho_f1({2, UnitaryKind::Hadamard}).rho;
  const ComplexMatrix h = hamiltonian_h(2);
  const ComplexMatrix m = sld(rho, h);
  CHECK(std::abs(error_propagation(rho, m, h) - 1.0 / qfi(rho, h)) < 1e-8);

  // Scale invariance of the quotient.
  CHECK(error_propagation(rho, 2.0 * m, h) ==
        doctest::Approx(error_propagation(rho, m, h)).epsilon(1e-12));
}

TEST_CASE("error propagation on a pure state") {
  Rng rng(29);
  const ComplexMatrix h = random_hermitian(5, rng);
  ComplexMatrix psi(5, 1);
  for (std::size_t k = 0; k < 5; ++k) psi(k, 0) = Complex(rng.gaussian(), rng.gaussian());
  psi *= Complex(1.0 / ket_norm(psi), 0.0);
  const ComplexMatrix rho = outer(psi);
  const ComplexMatrix m = sld(rho, h);
  CHECK(std::abs(error_propagation(rho, m, h) - 1.0 / qfi(rho, h)) < 1e-8);
}

TEST_CASE("error propagation dominates the inverse qfi for arbitrary estimators") {
  Rng rng(31);
  const ComplexMatrix rho = build_rho_f1({2, UnitaryKind::Fourier}).rho;
  const ComplexMatrix h = hamiltonian_h(2);
  const double f = qfi(rho, h);
  for (int rep = 0; rep < 25; ++rep) {
    const ComplexMatrix m = random_hermitian(16, rng);
    double value = 0.0;
    try {
      value = error_propagation(rho, m, h);
    } catch (const DomainError&) {
      continue;  // no signal in this direction
    }
    CHECK(value >= 1.0 / f - 1e-8);
  }
}

TEST_CASE("error propagation rejects estimators with no signal") {
  const ComplexMatrix rho = build_rho_f1({2, UnitaryKind::Fourier}).rho;
  const ComplexMatrix h = hamiltonian_h(2);
  CHECK_THROWS_AS(error_propagation(rho, ComplexMatrix::identity(16), h), DomainError);
}

TEST_CASE("qfi report assembles the derived figures") {
  const std::size_t d = 3;
  const ComplexMatrix rho = build_rho_f2(d).rho;
  const auto [h1, h2] = hamiltonian_local_terms(SubsystemDims::key_shield(d));
  const QfiReport report = make_qfi_report(rho, hamiltonian_h(d), h1, h2, d);
  CHECK(report.sep_bound == doctest::Approx(8.0));
  CHECK(report.gain == doctest::Approx(report.qfi / 8.0));
  CHECK(std::abs(report.qfi - 4.0 * report.variance) < 1e-8);
  CHECK(std::abs(report.mean_h) < 1e-10);
  CHECK(std::abs(report.gain - 2.0 * std::sqrt(3.0) / (1.0 + std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("qfi is invariant under conjugation by commuting local unitaries") {
  // Generators block diagonal in the key basis commute with the Hamiltonian.
  Rng rng(41);
  const std::size_t d = 2;
  const ComplexMatrix rho = build_rho_f1({d, UnitaryKind::Fourier}).rho;
  const ComplexMatrix h = hamiltonian_h(d);
  const double f = qfi(rho, h);

  const SubsystemDims grouped = SubsystemDims::key_shield_grouped(d);
  const std::vector<std::size_t> to_abab = {0, 2, 1, 3};
  for (int rep = 0; rep < 3; ++rep) {
    ComplexMatrix k1(2 * d, 2 * d), k2(2 * d, 2 * d);
    for (auto* k : {&k1, &k2}) {
      const ComplexMatrix ga = random_hermitian(d, rng);
      const ComplexMatrix gb = random_hermitian(d, rng);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          (*k)(r, c) = ga(r, c);
          (*k)(d + r, d + c) = gb(r, c);
        }
    }
    const ComplexMatrix u_grouped = kron(hermitian_exp(k1, 0.9), hermitian_exp(k2, 0.9));
    const ComplexMatrix u = reorder_subsystems(u_grouped, grouped, to_abab);
    CHECK(std::abs(qfi(u * rho * u.adjoint(), h) - f) < 1e-8);
  }
}
