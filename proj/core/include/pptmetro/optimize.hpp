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

#ifndef PPTMETRO_OPTIMIZE_HPP
#define PPTMETRO_OPTIMIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pptmetro/complex_matrix.hpp"
#include "pptmetro/metrology.hpp"
#include "pptmetro/rng.hpp"
#include "pptmetro/subsystems.hpp"

namespace pptmetro {

// The state step of the see-saw is a projected-gradient ascent over the PPT
// density matrices (Dykstra-corrected alternating projections onto
// {PSD} /\ {PPT} /\ {unit trace}) rather than an exact semidefinite program.
// Reported optima are best-found values, not certified bounds.

struct SeesawConfig {
  std::size_t max_outer_iters = 200;
  double step_scale = 1.0;
  std::size_t dykstra_iters = 500;
  double feas_tol = 1e-9;
  double objective_tol = 1e-7;
  std::size_t max_inner_steps = 20;
  std::uint64_t seed = 0;  // symmetry-breaking perturbation when the SLD vanishes
};

struct SearchConfig {
  std::size_t trials = 2000;
  double time_step = 0.1;   // evolution time per random move
  double step_decay = 0.97; // applied after every 50 consecutive rejections
};

struct FeasibilityResiduals {
  double psd = 0.0;
  double ppt = 0.0;
  double trace = 0.0;

  double worst() const { return psd > ppt ? (psd > trace ? psd : trace) : (ppt > trace ? ppt : trace); }
};

/// Verbatim per-iteration record of an optimizer run.
struct OptimizeTrace {
  std::vector<double> objectives;
  ComplexMatrix final_state;
  FeasibilityResiduals final_residuals;
  double final_qfi = 0.0;       // see-saw
  double final_distance = 0.0;  // local-unitary search
  std::size_t accepted_moves = 0;
};

FeasibilityResiduals feasibility_residuals(const ComplexMatrix& m, const SubsystemDims& dims);

/// Nearest point (in the Dykstra sense) of {PSD} /\ {PPT} /\ {trace 1}.
/// Inputs already inside the set are returned unchanged. Throws
/// ConvergenceError with the final residuals if the iteration cap is hit.
ComplexMatrix project_density_ppt(const ComplexMatrix& m, const SubsystemDims& dims,
                                  const SeesawConfig& cfg = {});

/// Alternating maximization of the QFI over PPT states: the measurement step
/// sets M to the scaled symmetric logarithmic derivative, the state step runs
/// projected gradient ascent on tr(rho W) with W = -M^2 + 2i[M,H], accepting
/// only steps that increase the objective. The recorded objective at each
/// outer iteration equals the QFI of the current state.
OptimizeTrace seesaw_maximize_qfi(const SubsystemDims& dims, const ComplexMatrix& h,
                                  const SeesawConfig& cfg, const ComplexMatrix& initial);

/// Frobenius distance between rho and the state after exactly one outer
/// see-saw iteration started at rho.
double fixed_point_residual(const ComplexMatrix& rho, const SubsystemDims& dims,
                            const ComplexMatrix& h, const SeesawConfig& cfg = {});

/// Random local generators commuting with the key Hamiltonian: each is
/// |0><0| (x) G + |1><1| (x) G' on a key qubit and its d-dimensional shield,
/// with G, G' independent Gaussian Hermitian. Deterministic under the rng.
std::pair<ComplexMatrix, ComplexMatrix> random_commuting_generator(std::size_t d, Rng& rng);

/// Randomized search for a local-unitary transformation taking rho_a to
/// rho_b: repeatedly conjugate by exp(-i K T) with K drawn from
/// random_commuting_generator, keeping moves that shrink ||rho - rho_b||_F.
OptimizeTrace lu_equivalence_search(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b,
                                    const SubsystemDims& dims, const SearchConfig& cfg,
                                    std::uint64_t seed);

}  // namespace pptmetro

#endif  // PPTMETRO_OPTIMIZE_HPP
