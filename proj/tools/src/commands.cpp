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

#include "pptmetro/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pptmetro/cli/qmx.hpp"
#include "pptmetro/linalg.hpp"
#include "pptmetro/metrology.hpp"
#include "pptmetro/optimize.hpp"
#include "pptmetro/states.hpp"
#include "pptmetro/verify.hpp"

namespace pptmetro::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string num17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<Subsystem> gamma_set(const SubsystemDims& dims) {
  if (dims.count() == 4) return {Subsystem::B, Subsystem::BPrime};
  return {Subsystem::B};
}

void print_state_summary(const ComplexMatrix& rho, const SubsystemDims& dims) {
  std::cout << "trace: " << num(rho.trace().real()) << "\n";
  std::cout << "rank: " << matrix_rank(rho) << "\n";
  std::cout << "min-eigenvalue: " << num(min_eigenvalue(rho)) << "\n";
  std::cout << "ppt-min-eigenvalue: " << num(min_eigenvalue(partial_transpose(rho, dims, gamma_set(dims))))
            << "\n";
}

struct GenOptions {
  std::string family = "f1";
  std::size_t d = 2;
  std::string unitary = "fourier";
  double phi0 = 0.0;
  std::string order = "abab";
  std::string out;
};

int cmd_gen(const GenOptions& opt) {
  const SubsystemOrder order = opt.order == "aabb" ? SubsystemOrder::AABB : SubsystemOrder::ABAB;
  StateBundle bundle;
  if (opt.family == "f1") {
    const UnitaryKind kind =
        opt.unitary == "hadamard" ? UnitaryKind::Hadamard : UnitaryKind::Fourier;
    bundle = build_rho_f1({opt.d, kind}, order);
  } else if (opt.family == "f2") {
    bundle = opt.d == 3 ? build_rho_f2(3, q_family_d3(opt.phi0), order)
                        : build_rho_f2(opt.d, order);
  } else {
    bundle = build_rho_4x4();
  }
  write_qmx(opt.out, bundle.rho, bundle.dims);
  print_state_summary(bundle.rho, bundle.dims);
  return kExitOk;
}

// Splits H into local terms over the (AA')(BB') cut when it has the form
// H1 (x) 1 + 1 (x) H2; empty result otherwise.
std::optional<std::pair<ComplexMatrix, ComplexMatrix>> split_local_terms(
    const ComplexMatrix& h, const SubsystemDims& dims) {
  ComplexMatrix grouped = h;
  SubsystemDims gdims = dims;
  if (dims.count() == 4) {
    std::vector<std::size_t> perm = {dims.index_of(Subsystem::A),
                                     dims.index_of(Subsystem::APrime),
                                     dims.index_of(Subsystem::B),
                                     dims.index_of(Subsystem::BPrime)};
    grouped = reorder_subsystems(h, dims, perm);
    gdims = dims.permuted(perm);
  }
  const std::size_t na = gdims.count() == 4 ? gdims.dims[0] * gdims.dims[1] : gdims.dims[0];
  const std::size_t nb = grouped.rows() / na;
  const SubsystemDims cut = SubsystemDims::bipartite(na, nb);

  const double mean = grouped.trace().real() / static_cast<double>(na * nb);
  ComplexMatrix h1 = (1.0 / static_cast<double>(nb)) * partial_trace(grouped, cut, {Subsystem::B});
  ComplexMatrix h2 = (1.0 / static_cast<double>(na)) * partial_trace(grouped, cut, {Subsystem::A});
  for (std::size_t i = 0; i < na; ++i) h1(i, i) -= 0.5 * mean;
  for (std::size_t i = 0; i < nb; ++i) h2(i, i) -= 0.5 * mean;

  const ComplexMatrix rebuilt = kron(h1, ComplexMatrix::identity(nb)) +
                                kron(ComplexMatrix::identity(na), h2);
  if (frobenius_distance(rebuilt, grouped) > 1e-10 * std::max(1.0, grouped.frobenius_norm()))
    return std::nullopt;
  return std::make_pair(std::move(h1), std::move(h2));
}

struct QfiOptions {
  std::string state;
  std::string ham = "auto";
};

int cmd_qfi(const QfiOptions& opt) {
  const QmxFile state = read_qmx(opt.state);
  ComplexMatrix h;
  if (opt.ham == "auto") {
    h = hamiltonian_for(state.dims);
  } else {
    const QmxFile hfile = read_qmx(opt.ham);
    if (hfile.matrix.rows() != state.matrix.rows())
      throw DimensionError("qfi: Hamiltonian and state dimensions differ");
    h = hfile.matrix;
  }

  const double f = qfi(state.matrix, h);
  std::cout << "qfi: " << num(f) << "\n";
  std::cout << "four-variance: " << num(4.0 * variance_of(state.matrix, h)) << "\n";
  std::cout << "mean-h: " << num(mean_of(state.matrix, h)) << "\n";

  const auto local = split_local_terms(h, state.dims);
  if (local.has_value()) {
    const double sep = sep_bound(local->first, local->second);
    std::cout << "sep-bound: " << num(sep) << "\n";
    std::cout << "gain: " << num(sep > 0.0 ? f / sep : 0.0) << "\n";
    try {
      std::cout << "robustness: " << num(robustness_numeric(state.matrix, h, sep)) << "\n";
    } catch (const NotUsefulError&) {
      std::cout << "robustness: n/a (state does not beat the separable bound)\n";
    }
  } else {
    std::cout << "sep-bound: n/a (Hamiltonian is not a sum of local terms)\n";
  }
  return kExitOk;
}

struct SweepOptions {
  int fig = 1;
  std::size_t dmax = 8;
  std::size_t d = 2;
  std::size_t steps = 10;
  std::string out;
};

// Numeric columns are filled only at desk scale (matrix dimension <= 1024).
bool within_budget(std::size_t d) { return 4 * d * d <= 1024; }

int cmd_sweep(const SweepOptions& opt) {
  std::ofstream out(opt.out);
  if (!out) throw QmxError("sweep: cannot open '" + opt.out + "' for writing");

  if (opt.fig == 1) {
    if (opt.dmax < 2) throw DomainError("sweep: --dmax must be >= 2");
    out << "d,qfi_analytic,qfi_numeric,sep_bound,qfi_max\n";
    for (std::size_t d = 2; d <= opt.dmax; ++d) {
      out << d << ',' << num17(qfi_f1_analytic(d)) << ',';
      if (within_budget(d)) {
        const StateBundle bundle = build_rho_f1({d, UnitaryKind::Fourier});
        out << num17(qfi(bundle.rho, hamiltonian_h(d)));
      }
      out << ',' << num17(8.0) << ',' << num17(16.0) << '\n';
    }
  } else {
    if (opt.steps < 1) throw DomainError("sweep: --steps must be >= 1");
    out << "p,qfi_noisy_analytic,qfi_noisy_numeric\n";
    std::optional<StateBundle> bundle;
    std::optional<ComplexMatrix> h;
    if (within_budget(opt.d)) {
      bundle = build_rho_f1({opt.d, UnitaryKind::Fourier});
      h = hamiltonian_h(opt.d);
    }
    for (std::size_t k = 0; k <= opt.steps; ++k) {
      const double p = static_cast<double>(k) / static_cast<double>(opt.steps);
      out << num17(p) << ',' << num17(qfi_noisy_analytic(opt.d, p)) << ',';
      if (bundle.has_value()) out << num17(qfi(white_noise_mix(bundle->rho, p), *h));
      out << '\n';
    }
  }
  if (!out) throw QmxError("sweep: write to '" + opt.out + "' failed");
  return kExitOk;
}

struct VerifyOptions {
  std::size_t d = 2;
  std::string family = "all";
  std::uint64_t seed = 1;
  std::string out;
  bool inject_corruption = false;
};

int cmd_verify(const VerifyOptions& opt) {
  VerifyConfig cfg;
  cfg.seed = opt.seed;
  if (opt.inject_corruption) cfg.corruption = 1e-3;

  const bool power_of_two = opt.d >= 2 && (opt.d & (opt.d - 1)) == 0;
  std::vector<VerificationReport> reports;
  if (opt.family == "f1" || opt.family == "all") {
    reports.push_back(verify_family(opt.d, Family::F1Fourier, cfg));
    if (power_of_two) reports.push_back(verify_family(opt.d, Family::F1Hadamard, cfg));
  }
  if (opt.family == "f2" || opt.family == "all") {
    reports.push_back(verify_family(opt.d, Family::F2, cfg));
  }
  if (opt.family == "all") {
    reports.push_back(verify_equivalences(cfg));
    reports.push_back(verify_qmatrix_theory(3));
    std::vector<std::size_t> flip_dims = {2, 4};
    if (opt.d >= 3 && opt.d <= 8 && opt.d != 4) flip_dims.push_back(opt.d);
    reports.push_back(verify_flip_invariance(flip_dims));
  }

  std::ostringstream csv;
  csv << "name,passed,residual,tolerance\n";
  bool all_passed = true;
  std::string first_failure;
  for (const VerificationReport& report : reports) {
    const std::string prefix = report.family + "-d" + std::to_string(report.d) + "/";
    for (const CheckResult& c : report.checks) {
      csv << prefix << c.name << ',' << (c.passed ? 1 : 0) << ',' << num17(c.residual) << ','
          << num17(c.tolerance) << '\n';
      if (!c.passed) {
        all_passed = false;
        if (first_failure.empty()) first_failure = prefix + c.name;
      }
    }
  }

  if (opt.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out_file(opt.out);
    if (!out_file) throw QmxError("verify: cannot open '" + opt.out + "' for writing");
    out_file << csv.str();
  }
  if (!all_passed) {
    std::cerr << "verify: FAILED check " << first_failure << "\n";
    return kExitCheckFailure;
  }
  std::cout << "verify: all checks passed\n";
  return kExitOk;
}

struct OptimizeOptions {
  std::size_t d = 2;
  std::string init = "f2";
  std::size_t iters = 200;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_optimize(const OptimizeOptions& opt) {
  SubsystemDims dims = SubsystemDims::key_shield(opt.d);
  ComplexMatrix initial;
  if (opt.init == "f2") {
    initial = build_rho_f2(opt.d).rho;
  } else if (opt.init == "mixed") {
    const std::size_t n = dims.total_dim();
    initial = (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
  } else {
    const QmxFile file = read_qmx(opt.init);
    if (file.dims.count() != 4)
      throw DomainError("optimize: initial state must have four subsystems");
    dims = file.dims;
    initial = file.matrix;
  }
  const std::size_t d = dims.dims[dims.index_of(Subsystem::APrime)];
  const ComplexMatrix h = hamiltonian_for(dims);

  SeesawConfig cfg;
  cfg.max_outer_iters = opt.iters;
  cfg.seed = opt.seed;

  std::cout << "fixed-point-residual: " << num(fixed_point_residual(initial, dims, h, cfg))
            << "\n";

  const OptimizeTrace trace = seesaw_maximize_qfi(dims, h, cfg, initial);
  for (std::size_t k = 0; k < trace.objectives.size(); ++k)
    std::cout << "iter " << k << " objective " << num(trace.objectives[k]) << "\n";
  std::cout << "final-qfi: " << num(trace.final_qfi) << "\n";
  std::cout << "gap-to-family-value: " << num(qfi_f1_analytic(d) - trace.final_qfi) << "\n";
  std::cout << "residual-psd: " << num(trace.final_residuals.psd) << "\n";
  std::cout << "residual-ppt: " << num(trace.final_residuals.ppt) << "\n";
  std::cout << "residual-trace: " << num(trace.final_residuals.trace) << "\n";

  if (!opt.out.empty()) write_qmx(opt.out, trace.final_state, dims);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Bound entangled states for quantum metrology: construction, "
               "figures of merit, verification, optimization"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Construct a state and write it as QMX");
  gen_cmd->add_option("--family", gen.family, "State family")
      ->check(CLI::IsMember({"f1", "f2", "4x4"}))
      ->capture_default_str();
  gen_cmd->add_option("--d", gen.d, "Shield dimension")->capture_default_str();
  gen_cmd->add_option("--unitary", gen.unitary, "Unitary choice for f1")
      ->check(CLI::IsMember({"fourier", "hadamard"}))
      ->capture_default_str();
  gen_cmd->add_option("--phi0", gen.phi0, "Free angle of the d=3 family")
      ->capture_default_str();
  gen_cmd->add_option("--order", gen.order, "Subsystem order")
      ->check(CLI::IsMember({"abab", "aabb"}))
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output QMX path")->required();

  QfiOptions qfi_opt;
  CLI::App* qfi_cmd = app.add_subcommand("qfi", "Metrological figures of merit of a state");
  qfi_cmd->add_option("--state", qfi_opt.state, "State QMX path")->required();
  qfi_cmd->add_option("--ham", qfi_opt.ham, "Hamiltonian: auto or a QMX path")
      ->capture_default_str();

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Write figure data as CSV");
  sweep_cmd->add_option("--fig", sweep.fig, "Which figure data set (1 or 3)")
      ->check(CLI::IsMember({1, 3}))
      ->capture_default_str();
  sweep_cmd->add_option("--dmax", sweep.dmax, "Largest dimension (fig 1)")
      ->capture_default_str();
  sweep_cmd->add_option("--d", sweep.d, "Dimension (fig 3)")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Noise grid steps (fig 3)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path")->required();

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--d", verify.d, "Shield dimension")->capture_default_str();
  verify_cmd->add_option("--family", verify.family, "Family selection")
      ->check(CLI::IsMember({"f1", "f2", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "CSV report path (default: stdout)");
  verify_cmd->add_flag("--inject-corruption", verify.inject_corruption)->group("");

  OptimizeOptions optimize;
  CLI::App* optimize_cmd = app.add_subcommand("optimize", "See-saw QFI maximization over PPT states");
  optimize_cmd->add_option("--d", optimize.d, "Shield dimension")->capture_default_str();
  optimize_cmd->add_option("--init", optimize.init, "Initial state: f2, mixed, or a QMX path")
      ->capture_default_str();
  optimize_cmd->add_option("--iters", optimize.iters, "Outer iteration cap")
      ->capture_default_str();
  optimize_cmd->add_option("--seed", optimize.seed, "Random seed")->capture_default_str();
  optimize_cmd->add_option("--out", optimize.out, "Write the final state as QMX");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (qfi_cmd->parsed()) return cmd_qfi(qfi_opt);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (verify_cmd->parsed()) return cmd_verify(verify);
    if (optimize_cmd->parsed()) return cmd_optimize(optimize);
  } catch (const QmxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pptmetro::cli
