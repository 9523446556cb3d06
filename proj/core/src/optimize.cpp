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

#include "pptmetro/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "pptmetro/errors.hpp"
#include "pptmetro/linalg.hpp"
#include "pptmetro/states.hpp"

namespace pptmetro {

namespace {

const std::vector<Subsystem> kTransposed = {Subsystem::B, Subsystem::BPrime};

std::vector<Subsystem> transposed_set(const SubsystemDims& dims) {
  if (dims.count() == 4) return kTransposed;
  return {Subsystem::B};
}

ComplexMatrix trace_projection(ComplexMatrix m) {
  const std::size_t n = m.rows();
  const Complex shift = (m.trace() - Complex(1.0, 0.0)) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= shift;
  return m;
}

// W = -M^2 + 2 i [M, H], the Hermitian gradient of the see-saw objective.
ComplexMatrix seesaw_witness(const ComplexMatrix& m, const ComplexMatrix& h) {
  ComplexMatrix w = Complex(-1.0, 0.0) * (m * m) + 2.0 * commutator_i(m, h);
  return w.hermitized();
}

struct OuterStepResult {
  ComplexMatrix state;
  double objective_start = 0.0;  // tr(rho W) at the fresh SLD, equals qfi(rho)
  double objective_end = 0.0;
};

// One see-saw outer iteration: refresh M from the SLD (with a one-time random
// kick if it vanishes), then run accepted-only projected gradient steps on
// the linear objective.
OuterStepResult seesaw_outer_step(const ComplexMatrix& rho, const SubsystemDims& dims,
                                  const ComplexMatrix& h, const SeesawConfig& cfg, Rng& rng,
                                  bool& perturbed) {
  ComplexMatrix m = sld(rho, h);
  if (m.frobenius_norm() < 1e-9 && !perturbed) {
    m += 1e-6 * random_hermitian(m.rows(), rng);
    perturbed = true;
  }
  const ComplexMatrix w = seesaw_witness(m, h);

  OuterStepResult result;
  result.objective_start = real_expectation(rho, w);

  // Ascent projections run at a relaxed tolerance; only the state handed back
  // to the caller gets the full-precision projection.
  SeesawConfig inner_cfg = cfg;
  inner_cfg.feas_tol = std::max(cfg.feas_tol, 1e-6);
  inner_cfg.dykstra_iters = std::min<std::size_t>(cfg.dykstra_iters, 100);

  ComplexMatrix current = rho;
  double objective = result.objective_start;
  const double wnorm = w.frobenius_norm();
  const double eta_base = wnorm > 0.0 ? cfg.step_scale / wnorm : 0.0;
  // Doubling on acceptance crosses flat stretches quickly; the displacement
  // cap keeps candidates within a few simplex diameters so the projection
  // stays cheap. Halving on rejection keeps every recorded move an
  // improvement.
  double eta = eta_base;
  const double eta_floor = eta_base * 1e-4;
  const double eta_cap = wnorm > 0.0 ? std::max(eta_base, 4.0 / wnorm) : 0.0;
  for (std::size_t inner = 0; inner < cfg.max_inner_steps && eta > eta_floor; ++inner) {
    ComplexMatrix candidate;
    try {
      candidate = project_density_ppt(current + eta * w, dims, inner_cfg);
    } catch (const ConvergenceError&) {
      eta *= 0.5;
      continue;
    }
    const double candidate_objective = real_expectation(candidate, w);
    if (candidate_objective > objective) {
      current = std::move(candidate);
      objective = candidate_objective;
      eta = std::min(eta * 2.0, eta_cap);
    } else {
      eta *= 0.5;
    }
  }
  result.state = std::move(current);
  result.objective_end = objective;
  return result;
}

}  // namespace

FeasibilityResiduals feasibility_residuals(const ComplexMatrix& m, const SubsystemDims& dims) {
  FeasibilityResiduals res;
  res.psd = std::max(0.0, -min_eigenvalue(m));
  res.ppt = std::max(0.0, -min_eigenvalue(partial_transpose(m, dims, transposed_set(dims))));
  res.trace = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  return res;
}

ComplexMatrix project_density_ppt(const ComplexMatrix& m, const SubsystemDims& dims,
                                  const SeesawConfig& cfg) {
  if (!m.is_square() || m.rows() != dims.total_dim())
    throw DimensionError("project_density_ppt: dims do not match matrix");
  const auto gamma_set = transposed_set(dims);

  ComplexMatrix x = m.hermitized();
  {
    const FeasibilityResiduals res = feasibility_residuals(x, dims);
    if (res.worst() <= cfg.feas_tol) return x;
  }

  const std::size_t n = x.rows();
  ComplexMatrix corr_psd(n, n), corr_ppt(n, n);
  FeasibilityResiduals res;
  for (std::size_t it = 0; it < cfg.dykstra_iters; ++it) {
    ComplexMatrix y = x + corr_psd;
    ComplexMatrix projected = psd_projection(y);
    corr_psd = y - projected;
    x = std::move(projected);

    y = x + corr_ppt;
    ComplexMatrix gamma = partial_transpose(y, dims, gamma_set);
    gamma = psd_projection(gamma);
    projected = partial_transpose(gamma, dims, gamma_set);
    corr_ppt = y - projected;
    x = std::move(projected);

    // Affine constraint needs no Dykstra correction.
    x = trace_projection(std::move(x));

    // The residual check costs two extra eigendecompositions, so run it only
    // every third cycle (and on the last).
    if (it % 3 == 0 || it + 1 == cfg.dykstra_iters) {
      res = feasibility_residuals(x, dims);
      if (res.worst() <= cfg.feas_tol) return x;
    }
  }
  throw ConvergenceError("project_density_ppt: no convergence after " +
                             std::to_string(cfg.dykstra_iters) + " iterations",
                         res.psd, res.ppt, res.trace);
}

OptimizeTrace seesaw_maximize_qfi(const SubsystemDims& dims, const ComplexMatrix& h,
                                  const SeesawConfig& cfg, const ComplexMatrix& initial) {
  if (!initial.is_square() || initial.rows() != dims.total_dim())
    throw DimensionError("seesaw_maximize_qfi: dims do not match initial state");
  {
    const FeasibilityResiduals res = feasibility_residuals(initial, dims);
    if (res.worst() > 1e-7)
      throw DomainError("seesaw_maximize_qfi: initial state is not a PPT density matrix "
                        "(worst residual " + std::to_string(res.worst()) + ")");
  }

  Rng rng(cfg.seed);
  bool perturbed = false;
  ComplexMatrix rho = initial.hermitized();

  OptimizeTrace trace;
  double previous = -1.0;
  for (std::size_t outer = 0; outer < cfg.max_outer_iters; ++outer) {
    OuterStepResult step = seesaw_outer_step(rho, dims, h, cfg, rng, perturbed);
    trace.objectives.push_back(step.objective_start);
    rho = std::move(step.state);
    if (outer > 0 && step.objective_start - previous < cfg.objective_tol) break;
    previous = step.objective_start;
  }

  // The ascent ran at a relaxed feasibility; emit a tightly projected state.
  if (feasibility_residuals(rho, dims).worst() > cfg.feas_tol)
    rho = project_density_ppt(rho, dims, cfg);

  trace.final_state = rho;
  trace.final_residuals = feasibility_residuals(rho, dims);
  trace.final_qfi = qfi(rho, h);
  return trace;
}

double fixed_point_residual(const ComplexMatrix& rho, const SubsystemDims& dims,
                            const ComplexMatrix& h, const SeesawConfig& cfg) {
  {
    const FeasibilityResiduals res = feasibility_residuals(rho, dims);
    if (res.worst() > 1e-7)
      throw DomainError("fixed_point_residual: state is not a PPT density matrix");
  }
  Rng rng(cfg.seed);
  bool perturbed = false;
  const OuterStepResult step = seesaw_outer_step(rho.hermitized(), dims, h, cfg, rng, perturbed);
  return frobenius_distance(rho, step.state);
}

std::pair<ComplexMatrix, ComplexMatrix> random_commuting_generator(std::size_t d, Rng& rng) {
  auto block_generator = [&]() {
    const ComplexMatrix ga = random_hermitian(d, rng);
    const ComplexMatrix gb = random_hermitian(d, rng);
    ComplexMatrix k(2 * d, 2 * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        k(r, c) = ga(r, c);
        k(d + r, d + c) = gb(r, c);
      }
    return k;
  };
  ComplexMatrix k1 = block_generator();
  ComplexMatrix k2 = block_generator();
  return {std::move(k1), std::move(k2)};
}

OptimizeTrace lu_equivalence_search(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b,
                                    const SubsystemDims& dims, const SearchConfig& cfg,
                                    std::uint64_t seed) {
  if (rho_a.rows() != rho_b.rows() || rho_a.cols() != rho_b.cols())
    throw DimensionError("lu_equivalence_search: states have different dimensions");
  if (dims.count() != 4 || dims.total_dim() != rho_a.rows())
    throw DimensionError("lu_equivalence_search: expected a four-subsystem factorization");
  const std::size_t d = dims.dims[dims.index_of(Subsystem::APrime)];

  // Local unitaries act per party, so build them grouped (A A' | B B') and
  // permute into the state's layout once.
  const SubsystemDims grouped = SubsystemDims::key_shield_grouped(d);
  std::vector<std::size_t> to_state_order;
  {
    // Position of each grouped subsystem in the state's label order.
    for (Subsystem s : dims.labels) to_state_order.push_back(grouped.index_of(s));
  }

  Rng rng(seed);
  OptimizeTrace trace;
  ComplexMatrix rho = rho_a;
  double dist = frobenius_distance(rho, rho_b);
  double t = cfg.time_step;
  std::size_t rejection_streak = 0;

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    if (dist < 1e-14) {
      trace.objectives.push_back(dist);
      continue;
    }
    auto [k1, k2] = random_commuting_generator(d, rng);
    const ComplexMatrix u_local = kron(hermitian_exp(k1, t), hermitian_exp(k2, t));
    const ComplexMatrix u = reorder_subsystems(u_local, grouped, to_state_order);
    const ComplexMatrix candidate = u * rho * u.adjoint();
    const double cand_dist = frobenius_distance(candidate, rho_b);
    if (cand_dist < dist) {
      rho = candidate;
      dist = cand_dist;
      ++trace.accepted_moves;
      rejection_streak = 0;
    } else {
      ++rejection_streak;
      if (rejection_streak % 50 == 0) t *= cfg.step_decay;
    }
    trace.objectives.push_back(dist);
  }

  trace.final_state = rho;
  trace.final_distance = dist;
  trace.final_residuals = feasibility_residuals(rho, dims);
  return trace;
}

}  // namespace pptmetro
