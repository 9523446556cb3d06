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

#ifndef PPTMETRO_VERIFY_HPP
#define PPTMETRO_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pptmetro/metrology.hpp"

namespace pptmetro {

enum class Family { F1Fourier, F1Hadamard, F2 };

std::string_view family_name(Family family);

/// The analytic claims the library documents about its states. Every claim
/// is exercised by at least one named check across the standard reports;
/// claims_covered() exposes the mapping so tests can assert exhaustiveness.
enum class Claim {
  QfiValue,             // QFI of both families equals 16 sqrt(d)/(1+sqrt(d))
  VarianceSaturation,   // QFI = 4 (Delta H)^2 and <H> = 0 on the families
  WhiteNoiseQfi,        // closed-form QFI under white noise + robustness
  F1MatrixElements,     // <mu|H|nu> pattern of the first family
  F2MatrixElements,     // <mu|H|nu> pattern of the second family
  FlipInvariance,       // permutation invariance iff the unitary is real symmetric
  QfiUpperBound,        // QFI <= 16 for every state; attained by the qubit probe
  PtInvariantProjector  // sum_m |t_m><t_m| equals its own partial transpose
};

inline constexpr std::array<Claim, 8> kAllClaims = {
    Claim::QfiValue,          Claim::VarianceSaturation, Claim::WhiteNoiseQfi,
    Claim::F1MatrixElements,  Claim::F2MatrixElements,   Claim::FlipInvariance,
    Claim::QfiUpperBound,     Claim::PtInvariantProjector};

std::string_view claim_name(Claim claim);

/// Which claim a check name belongs to, if any.
std::optional<Claim> claim_of(std::string_view check_name);

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string details;
};

struct VerificationReport {
  std::string family;
  std::size_t d = 0;
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, double tolerance, std::string details = "");
  bool all_passed() const;
  void sort_by_name();

  std::string to_text() const;
  /// Header row plus one row per check: name,passed,residual,tolerance.
  std::string to_csv() const;
};

std::vector<Claim> claims_covered(const VerificationReport& report);

struct VerifyConfig {
  std::uint64_t seed = 1;
  ToleranceConfig tol{};
  std::size_t random_states = 20;  // sample size for the upper-bound check
  double corruption = 0.0;         // test hook: entry perturbation applied before checking
};

/// Structural and metrological checks of one family state at one dimension:
/// trace/PSD/PPT, ranks of the state and its partial transpose, the labeled
/// eigenvector assignments, QFI against the closed form (both formulas),
/// variance saturation, the energy matrix-element pattern, the white-noise
/// curve at five mixing weights, the robustness bisection, and the flat QFI
/// upper bound on random states.
VerificationReport verify_family(std::size_t d, Family family, const VerifyConfig& cfg = {});

/// Cross-construction identities: the private-bit mixture against the direct
/// build (d = 2 and d = 3), the two-ququart relabeling with its eigenvalue and
/// eigenspace correspondences, and the symmetric/antisymmetric decomposition
/// of the d = 2 state with mixing angle t = sqrt(2) - 1.
VerificationReport verify_equivalences(const VerifyConfig& cfg = {});

/// Properties of the permutation-matrix machinery for n = 1..n_max (unique
/// one-positions, first-row placement, product closure, partial-transpose
/// invariance of the t projector) plus the d = 3 rotation family relations.
VerificationReport verify_qmatrix_theory(std::size_t n_max);

/// Flip invariance of the first family: invariant for the real symmetric
/// unitary, witnessed non-invariant for the complex Fourier choice at d >= 3.
VerificationReport verify_flip_invariance(const std::vector<std::size_t>& d_list);

}  // namespace pptmetro

#endif  // PPTMETRO_VERIFY_HPP
