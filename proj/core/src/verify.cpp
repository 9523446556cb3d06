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

#include "pptmetro/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pptmetro/linalg.hpp"
#include "pptmetro/rng.hpp"
#include "pptmetro/states.hpp"

namespace pptmetro {

namespace {

const std::vector<Subsystem> kGamma = {Subsystem::B, Subsystem::BPrime};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::F1Fourier: return "f1-fourier";
    case Family::F1Hadamard: return "f1-hadamard";
    case Family::F2: return "f2";
  }
  return "?";
}

std::string_view claim_name(Claim claim) {
  switch (claim) {
    case Claim::QfiValue: return "qfi-value";
    case Claim::VarianceSaturation: return "variance-saturation";
    case Claim::WhiteNoiseQfi: return "white-noise-qfi";
    case Claim::F1MatrixElements: return "f1-matrix-elements";
    case Claim::F2MatrixElements: return "f2-matrix-elements";
    case Claim::FlipInvariance: return "flip-invariance";
    case Claim::QfiUpperBound: return "qfi-upper-bound";
    case Claim::PtInvariantProjector: return "pt-invariant-projector";
  }
  return "?";
}

std::optional<Claim> claim_of(std::string_view name) {
  static const std::pair<std::string_view, Claim> table[] = {
      {"qfi-analytic", Claim::QfiValue},
      {"qfi-dual-form", Claim::QfiValue},
      {"variance-saturation", Claim::VarianceSaturation},
      {"mean-energy-zero", Claim::VarianceSaturation},
      {"white-noise-qfi", Claim::WhiteNoiseQfi},
      {"robustness-bisection", Claim::WhiteNoiseQfi},
      {"energy-matrix-elements-f1", Claim::F1MatrixElements},
      {"energy-matrix-elements-f2", Claim::F2MatrixElements},
      {"flip-invariant", Claim::FlipInvariance},
      {"flip-variant", Claim::FlipInvariance},
      {"qfi-upper-bound", Claim::QfiUpperBound},
      {"t-projector-pt-invariant", Claim::PtInvariantProjector},
  };
  for (const auto& [prefix, claim] : table)
    if (name.substr(0, prefix.size()) == prefix) return claim;
  return std::nullopt;
}

void VerificationReport::add(std::string name, double residual, double tolerance,
                             std::string details) {
  checks.push_back({std::move(name), residual <= tolerance, residual, tolerance,
                    std::move(details)});
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::sort_by_name() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "report family=" << family << " d=" << d << "\n";
  for (const CheckResult& c : checks) {
    out << (c.passed ? "[pass] " : "[FAIL] ") << c.name << " residual=" << fmt(c.residual)
        << " tol=" << fmt(c.tolerance);
    if (!c.details.empty()) out << " (" << c.details << ")";
    out << "\n";
  }
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "name,passed,residual,tolerance\n";
  char buf[64];
  for (const CheckResult& c : checks) {
    std::snprintf(buf, sizeof(buf), ",%d,%.17g,%.17g\n", c.passed ? 1 : 0, c.residual,
                  c.tolerance);
    out << c.name << buf;
  }
  return out.str();
}

std::vector<Claim> claims_covered(const VerificationReport& report) {
  std::vector<Claim> claims;
  for (const CheckResult& c : report.checks) {
    if (auto claim = claim_of(c.name); claim.has_value()) {
      if (std::find(claims.begin(), claims.end(), *claim) == claims.end())
        claims.push_back(*claim);
    }
  }
  return claims;
}

namespace {

double spectrum_distance(std::vector<double> got, std::vector<double> expected) {
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got.size() != expected.size()) return 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    worst = std::max(worst, std::abs(got[i] - expected[i]));
  return worst;
}

StateBundle build_family(std::size_t d, Family family) {
  switch (family) {
    case Family::F1Fourier: return build_rho_f1({d, UnitaryKind::Fourier});
    case Family::F1Hadamard: return build_rho_f1({d, UnitaryKind::Hadamard});
    case Family::F2: return build_rho_f2(d);
  }
  throw DomainError("build_family: unknown family");
}

}  // namespace

VerificationReport verify_family(std::size_t d, Family family, const VerifyConfig& cfg) {
  StateBundle bundle = build_family(d, family);
  if (cfg.corruption != 0.0) bundle.rho(0, 0) += cfg.corruption;

  const ComplexMatrix& rho = bundle.rho;
  const ComplexMatrix h = hamiltonian_h(d);
  const bool is_f1 = family != Family::F2;
  const double p1 = p1_weight(d), p2 = p2_weight(d);
  const std::size_t n = rho.rows();

  VerificationReport report;
  report.family = std::string(family_name(family));
  report.d = d;

  report.add("trace-one", std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag()),
             1e-12);
  report.add("psd", std::max(0.0, -min_eigenvalue(rho)), 1e-10);
  const ComplexMatrix gamma = partial_transpose(rho, bundle.dims, kGamma);
  report.add("ppt", std::max(0.0, -min_eigenvalue(gamma)), 1e-10);

  const double expected_rank = is_f1 ? double(d * d + d) : double(d * d + 2 * d);
  const double expected_rank_pt = is_f1 ? double(d * d + d) : double(2 * d * d + d);
  report.add("rank-state", std::abs(double(matrix_rank(rho)) - expected_rank), 0.5,
             "expected " + std::to_string(std::size_t(expected_rank)));
  report.add("rank-partial-transpose",
             std::abs(double(matrix_rank(gamma)) - expected_rank_pt), 0.5,
             "expected " + std::to_string(std::size_t(expected_rank_pt)));

  if (is_f1) {
    report.add("pt-self-dual", max_abs_diff(gamma, rho), 1e-14);
  } else {
    std::vector<double> expected(n, 0.0);
    for (std::size_t i = 0; i < 2 * d * d; ++i) expected[i] = p1 / double(2 * d * d);
    for (std::size_t i = 0; i < d; ++i) expected[2 * d * d + i] = p2 / double(d);
    report.add("pt-spectrum", spectrum_distance(hermitian_eig(gamma).eigenvalues, expected),
               1e-10);
  }

  {
    double worst = 0.0;
    for (const auto& kets : {bundle.nonzero_kets, bundle.zero_kets})
      for (const LabeledKet& k : kets) {
        ComplexMatrix residual = rho * k.ket - k.eigenvalue * k.ket;
        worst = std::max(worst, ket_norm(residual));
      }
    report.add("labeled-eigenvectors", worst, 1e-10);
  }

  const double f_analytic = qfi_f1_analytic(d);
  const double f_numeric = qfi(rho, h, cfg.tol);
  report.add("qfi-analytic", std::abs(f_numeric - f_analytic), 1e-8,
             "qfi " + fmt(f_numeric));
  report.add("qfi-dual-form", std::abs(f_numeric - qfi_alt(rho, h, cfg.tol)), 1e-8);
  report.add("variance-saturation", std::abs(f_numeric - 4.0 * variance_of(rho, h)), 1e-8);
  report.add("mean-energy-zero", std::abs(mean_of(rho, h)), 1e-10);

  {
    // <plus|H|minus> = 2 on matched sign pairs, zero among all nonzero kets.
    double worst = 0.0;
    for (std::size_t i = 0; i < bundle.zero_kets.size(); ++i) {
      const std::string& label = bundle.zero_kets[i].label;
      if (label.find('-') == std::string::npos) continue;
      // minus partner "x-_ij" pairs with nonzero ket "x_ij".
      std::string partner = label;
      partner.erase(partner.find('-'), 1);
      for (const LabeledKet& plus : bundle.nonzero_kets) {
        if (plus.label != partner) continue;
        const Complex elem = inner(plus.ket, h * bundle.zero_kets[i].ket);
        const double expected = partner[0] == 'w' || partner[0] == 's' ? 0.0 : 2.0;
        worst = std::max(worst, std::abs(elem - Complex(expected, 0.0)));
      }
    }
    for (const LabeledKet& a : bundle.nonzero_kets)
      for (const LabeledKet& b : bundle.nonzero_kets)
        worst = std::max(worst, std::abs(inner(a.ket, h * b.ket)));
    report.add(is_f1 ? "energy-matrix-elements-f1" : "energy-matrix-elements-f2", worst, 1e-12);
  }

  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double numeric = qfi(white_noise_mix(rho, p), h, cfg.tol);
    char name[48];
    std::snprintf(name, sizeof(name), "white-noise-qfi-p%.1f", p);
    report.add(name, std::abs(numeric - qfi_noisy_analytic(d, p)), 1e-8);
  }

  try {
    report.add("robustness-bisection",
               std::abs(robustness_numeric(rho, h, 8.0, cfg.tol) - robustness_analytic(d)),
               1e-6);
  } catch (const NotUsefulError& e) {
    report.add("robustness-bisection", 1.0, 1e-6, e.what());
  }

  {
    Rng rng(cfg.seed);
    double worst = 0.0;
    for (std::size_t k = 0; k < cfg.random_states; ++k) {
      const double f = qfi(random_density_matrix(n, rng), h, cfg.tol);
      worst = std::max(worst, f - 16.0);
    }
    report.add("qfi-upper-bound-random", std::max(0.0, worst), 1e-8,
               std::to_string(cfg.random_states) + " samples");
    report.add("qfi-upper-bound-attained",
               std::abs(qfi(maximally_entangled_probe(d), h, cfg.tol) - 16.0), 1e-8);
  }

  report.sort_by_name();
  return report;
}

namespace {

// Projector onto the span of an orthonormal list of kets.
ComplexMatrix span_projector(const std::vector<ComplexMatrix>& kets) {
  ComplexMatrix p(kets.front().rows(), kets.front().rows());
  for (const ComplexMatrix& k : kets) p += outer(k);
  return p;
}

}  // namespace

VerificationReport verify_equivalences(const VerifyConfig& cfg) {
  VerificationReport report;
  report.family = "equivalences";
  report.d = 2;

  // Private-bit mixture against the direct four-sum construction.
  report.add("private-bit-mixture-d2",
             max_abs_diff(f1_from_private_bits(2, UnitaryKind::Hadamard),
                          build_rho_f1({2, UnitaryKind::Hadamard}).rho),
             1e-12);
  report.add("private-bit-mixture-d3",
             max_abs_diff(f1_from_private_bits(3, UnitaryKind::Fourier),
                          build_rho_f1({3, UnitaryKind::Fourier}).rho),
             1e-12);

  const StateBundle f1 = build_rho_f1({2, UnitaryKind::Hadamard});
  const StateBundle quart = build_rho_4x4();

  report.add("relabel-4x4-match",
             max_abs_diff(relabel_key_shield_to_4x4(f1.rho), quart.rho), 1e-12);

  const double lambda_w = p2_weight(2) / 2.0;
  const double q_4x4 = (std::sqrt(2.0) - 1.0) / 2.0;
  report.add("relabel-eigenvalue-identity", std::abs(lambda_w - q_4x4), 1e-14,
             "shared eigenvalue (sqrt(2)-1)/2");

  {
    // Eigenvalue subspaces must map onto each other (individual eigenvectors
    // are only fixed up to rotations inside the degenerate blocks).
    std::vector<ComplexMatrix> v_mapped, w_mapped, psi_p, psi_q;
    for (const LabeledKet& k : f1.nonzero_kets) {
      (k.label[0] == 'v' ? v_mapped : w_mapped).push_back(relabel_key_shield_to_4x4(k.ket));
    }
    for (const LabeledKet& k : quart.nonzero_kets) {
      (k.eigenvalue > 0.17 ? psi_q : psi_p).push_back(k.ket);
    }
    report.add("relabel-subspace-v",
               max_abs_diff(span_projector(v_mapped), span_projector(psi_p)), 1e-12);
    report.add("relabel-subspace-w",
               max_abs_diff(span_projector(w_mapped), span_projector(psi_q)), 1e-12);
  }

  {
    const ComplexMatrix f = flip_operator(quart.dims);
    report.add("flip-invariance-4x4", max_abs_diff(f * quart.rho * f, quart.rho), 1e-14);
  }

  // Symmetric/antisymmetric regrouping of the d = 2 state from its labeled
  // eigenvectors. Only the symmetric part is fully supported on the +1 flip
  // eigenspace (the v_11 vector is itself flip symmetric), so that is the
  // support residual checked here.
  {
    auto ket_of = [&](const char* label) {
      for (const LabeledKet& k : f1.nonzero_kets)
        if (k.label == label) return k.ket;
      throw DomainError(std::string("missing ket ") + label);
    };
    const ComplexMatrix v00 = ket_of("v_00"), v01 = ket_of("v_01"), v10 = ket_of("v_10"),
                        v11 = ket_of("v_11"), w0 = ket_of("w_0"), w1 = ket_of("w_1");
    const double inv_sqrt2 = M_SQRT1_2;
    const ComplexMatrix v01p = inv_sqrt2 * (v01 + v10);
    const ComplexMatrix v10p = inv_sqrt2 * (v01 - v10);
    const double t = std::sqrt(2.0) - 1.0;
    const double norm = std::sqrt(1.0 + t * t);
    const ComplexMatrix w0p = (1.0 / norm) * (w0 + t * w1);
    const ComplexMatrix w1p = (1.0 / norm) * (w1 - t * w0);

    const double p1 = p1_weight(2), p2 = p2_weight(2);
    const ComplexMatrix rho_s = (0.5 * p1) * (outer(v00) + outer(v01p)) + p2 * outer(w0p);
    const ComplexMatrix rho_a = (0.5 * p1) * (outer(v11) + outer(v10p)) + p2 * outer(w1p);

    report.add("sym-split-mixture", max_abs_diff(0.5 * rho_s + 0.5 * rho_a, f1.rho), 1e-12);

    const std::vector<double> expected = {p2, 0.5 * p1, 0.5 * p1};
    auto top3 = [](const ComplexMatrix& m) {
      auto ev = hermitian_eig(m).eigenvalues;
      ev.resize(3);
      return ev;
    };
    report.add("sym-split-sym-spectrum", spectrum_distance(top3(rho_s), expected), 1e-12);
    report.add("sym-split-anti-spectrum", spectrum_distance(top3(rho_a), expected), 1e-12);

    const ComplexMatrix f = flip_operator(f1.dims);
    const ComplexMatrix proj_minus = 0.5 * (ComplexMatrix::identity(16) - f);
    report.add("sym-split-sym-support", (proj_minus * rho_s * proj_minus).frobenius_norm(),
               1e-12);

    // w mixing angle: the t-combination must equal the closed-form expansion
    // with c+- = (1/2) sqrt(1 +- 1/sqrt(2)).
    const double cp = 0.5 * std::sqrt(1.0 + M_SQRT1_2);
    const double cm = 0.5 * std::sqrt(1.0 - M_SQRT1_2);
    auto ket4 = [](std::size_t a, std::size_t b, std::size_t i, std::size_t j) {
      return basis_ket(16, ((a * 2 + b) * 2 + i) * 2 + j);
    };
    const ComplexMatrix w0p_expected = cp * (ket4(0, 1, 0, 0) + ket4(1, 0, 0, 0)) +
                                       cm * (ket4(0, 1, 1, 1) + ket4(1, 0, 1, 1));
    const ComplexMatrix w1p_expected = cp * (ket4(0, 1, 1, 1) - ket4(1, 0, 1, 1)) +
                                       cm * (ket4(1, 0, 0, 0) - ket4(0, 1, 0, 0));
    const double worst = std::max(max_abs_diff(w0p, w0p_expected),
                                  max_abs_diff(w1p, w1p_expected));
    report.add("sym-split-mixing-angle", worst, 1e-14, "t = sqrt(2)-1");
  }

  (void)cfg;
  report.sort_by_name();
  return report;
}

VerificationReport verify_qmatrix_theory(std::size_t n_max) {
  if (n_max < 1) throw DomainError("verify_qmatrix_theory: n_max must be >= 1");
  VerificationReport report;
  report.family = "q-machinery";
  report.d = std::size_t{1} << n_max;

  for (std::size_t n = 1; n <= n_max; ++n) {
    const QFamily fam = p_family(n);
    const std::size_t d = fam.d;
    const std::string suffix = "-n" + std::to_string(n);

    // Exactly one unit entry per row and column, and no shared positions.
    double violations = 0.0;
    ComplexMatrix occupied(d, d);
    for (const ComplexMatrix& p : fam.q_mats) {
      for (std::size_t r = 0; r < d; ++r) {
        std::size_t row_ones = 0;
        for (std::size_t c = 0; c < d; ++c) {
          const double x = p(r, c).real();
          if (x != 0.0 && x != 1.0) violations += 1.0;
          if (x == 1.0) {
            ++row_ones;
            occupied(r, c) += 1.0;
          }
        }
        if (row_ones != 1) violations += 1.0;
      }
    }
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (occupied(r, c).real() != 1.0) violations += 1.0;
    report.add("p-family-unique-ones" + suffix, violations, 0.5);

    double first_row = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      if (fam.q_mats[k](0, k).real() != 1.0) first_row += 1.0;
      if (fam.q_mats[k](k, 0).real() != 1.0) first_row += 1.0;
    }
    report.add("p-family-first-row" + suffix, first_row, 0.5);

    double closure = 0.0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const ComplexMatrix prod = fam.q_mats[a] * fam.q_mats[b];
        bool found = false;
        for (const ComplexMatrix& p : fam.q_mats)
          if (max_abs_diff(prod, p) < 1e-14) {
            found = true;
            break;
          }
        if (!found) closure += 1.0;
      }
    report.add("p-family-product-closure" + suffix, closure, 0.5);

    const auto ts = t_kets(fam);
    ComplexMatrix t_projector(ts.front().rows(), ts.front().rows());
    for (const ComplexMatrix& t : ts) t_projector += outer(t);
    const SubsystemDims dims = SubsystemDims::key_shield(d);
    report.add("t-projector-pt-invariant" + suffix,
               max_abs_diff(partial_transpose(t_projector, dims, kGamma), t_projector), 1e-12);
  }

  {
    const QFamily fam = q_family_d3();
    const std::size_t d = 3;

    double zero_pattern = 0.0;
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 2}, {1, 2}, {2, 0}, {2, 1}}) {
      double norm2 = 0.0;
      for (std::size_t k = 0; k < d; ++k) norm2 += std::norm(fam.q_mats[k](i, j));
      zero_pattern = std::max(zero_pattern, std::sqrt(norm2));
    }
    report.add("q3-zero-pattern", zero_pattern, 1e-12);

    // Subgroup relations: q_00 = -q_11 = sum_k cos(phi_k)|kk>, q_01 = q_10 =
    // sum_k sin(phi_k)|kk>, q_22 = sum_k |kk>, with D = (sqrt(3/2), sqrt(3/2),
    // sqrt(3)) and N = (2, 2, 1).
    double subgroup = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double phi = 2.0 * M_PI * double(k) / 3.0 + fam.phi0;
      subgroup = std::max(subgroup, std::abs(fam.q_mats[k](0, 0).real() - std::cos(phi)));
      subgroup = std::max(subgroup, std::abs(fam.q_mats[k](1, 1).real() + std::cos(phi)));
      subgroup = std::max(subgroup, std::abs(fam.q_mats[k](0, 1).real() - std::sin(phi)));
      subgroup = std::max(subgroup, std::abs(fam.q_mats[k](1, 0).real() - std::sin(phi)));
      subgroup = std::max(subgroup, std::abs(fam.q_mats[k](2, 2).real() - 1.0));
    }
    const double d01 = std::sqrt(1.5), d2 = std::sqrt(3.0);
    subgroup = std::max(subgroup, std::abs(fam.d_consts[0] - d01));
    subgroup = std::max(subgroup, std::abs(fam.d_consts[1] - d01));
    subgroup = std::max(subgroup, std::abs(fam.d_consts[2] - d2));
    if (fam.n_counts != std::vector<std::size_t>{2, 2, 1}) subgroup = std::max(subgroup, 1.0);
    report.add("q3-subgroups", subgroup, 1e-12);

    double ortho = 0.0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Complex dot = inner(fam.qbar_basis[a], fam.qbar_basis[b]);
        ortho = std::max(ortho, std::abs(dot - Complex(a == b ? 1.0 : 0.0, 0.0)));
      }
    report.add("q3-qbar-orthonormal", ortho, 1e-12);

    double consistency = 0.0;
    for (std::size_t m = 0; m < d; ++m)
      consistency += double(fam.n_counts[m]) * fam.d_consts[m] * fam.d_consts[m];
    report.add("q3-consistency-sum", std::abs(consistency - 9.0), 1e-10);

    const auto svecs = s_kets(fam);
    const auto tvecs = t_kets(fam);
    ComplexMatrix s_proj(svecs.front().rows(), svecs.front().rows());
    ComplexMatrix t_proj(svecs.front().rows(), svecs.front().rows());
    for (const ComplexMatrix& s : svecs) s_proj += outer(s);
    for (const ComplexMatrix& t : tvecs) t_proj += outer(t);
    const SubsystemDims dims = SubsystemDims::key_shield(d);
    report.add("q3-s-t-relation",
               max_abs_diff(partial_transpose(s_proj, dims, kGamma), t_proj), 1e-12);
  }

  report.sort_by_name();
  return report;
}

VerificationReport verify_flip_invariance(const std::vector<std::size_t>& d_list) {
  VerificationReport report;
  report.family = "flip-invariance";
  report.d = d_list.empty() ? 0 : d_list.back();

  for (std::size_t d : d_list) {
    const bool power_of_two = d >= 2 && (d & (d - 1)) == 0;
    if (power_of_two) {
      const StateBundle bundle = build_rho_f1({d, UnitaryKind::Hadamard});
      const ComplexMatrix f = flip_operator(bundle.dims);
      report.add("flip-invariant-hadamard-d" + std::to_string(d),
                 max_abs_diff(f * bundle.rho * f, bundle.rho), 1e-12);
    }
    if (d >= 3) {
      // The "only if" direction, witnessed: the Fourier unitary is not real,
      // so the state must move. Recorded as a shortfall against the 1e-3
      // separation so that passed <=> residual <= tolerance still holds.
      const StateBundle bundle = build_rho_f1({d, UnitaryKind::Fourier});
      const ComplexMatrix f = flip_operator(bundle.dims);
      const double distance = frobenius_distance(f * bundle.rho * f, bundle.rho);
      report.add("flip-variant-fourier-d" + std::to_string(d), std::max(0.0, 1e-3 - distance),
                 0.0, "flip distance " + fmt(distance));
    }
  }

  report.sort_by_name();
  return report;
}

}  // namespace pptmetro
