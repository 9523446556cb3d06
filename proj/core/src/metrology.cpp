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

#include "pptmetro/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pptmetro/errors.hpp"
#include "pptmetro/linalg.hpp"

namespace pptmetro {

namespace {

// Eigendecomposition of rho with H rotated into the eigenbasis, eigenvalues
// grouped into degeneracy clusters, and |H|^2 weights summed per cluster pair.
struct SpectralData {
  std::vector<double> cluster_values;       // representative eigenvalue per cluster
  std::vector<std::vector<double>> weight;  // weight[a][b] = sum |H_mu,nu|^2 over the pair
  double max_eigenvalue = 0.0;
};

SpectralData spectral_data(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const ToleranceConfig& tol) {
  if (!rho.is_square() || rho.rows() != h.rows() || h.rows() != h.cols())
    throw DimensionError("qfi: state and Hamiltonian shapes disagree");

  const EigenSystem es = hermitian_eig(rho);
  const std::size_t n = rho.rows();

  SpectralData data;
  data.max_eigenvalue = std::abs(es.eigenvalues.front());
  for (double l : es.eigenvalues) data.max_eigenvalue = std::max(data.max_eigenvalue, std::abs(l));

  // Eigenvalues arrive sorted descending; split into clusters at gaps wider
  // than the degeneracy width.
  const double width = tol.eig_zero_cut * std::max(1.0, data.max_eigenvalue);
  std::vector<std::size_t> cluster_of(n, 0);
  double cluster_sum = es.eigenvalues[0];
  std::size_t cluster_count = 1, cluster_start = 0;
  std::vector<double> means;
  for (std::size_t i = 1; i < n; ++i) {
    if (es.eigenvalues[i - 1] - es.eigenvalues[i] > width) {
      means.push_back(cluster_sum / static_cast<double>(i - cluster_start));
      cluster_sum = 0.0;
      cluster_start = i;
      ++cluster_count;
    }
    cluster_sum += es.eigenvalues[i];
    cluster_of[i] = cluster_count - 1;
  }
  means.push_back(cluster_sum / static_cast<double>(n - cluster_start));
  data.cluster_values = std::move(means);

  const ComplexMatrix h_tilde = es.eigenvectors.adjoint() * (h * es.eigenvectors);
  data.weight.assign(cluster_count, std::vector<double>(cluster_count, 0.0));
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      data.weight[cluster_of[mu]][cluster_of[nu]] += std::norm(h_tilde(mu, nu));
  return data;
}

double qfi_from_clusters(const std::vector<double>& lambda,
                         const std::vector<std::vector<double>>& weight, double max_lambda,
                         double pair_cut) {
  const double cut = pair_cut * std::max(1e-300, max_lambda);
  double sum = 0.0;
  for (std::size_t a = 0; a < lambda.size(); ++a)
    for (std::size_t b = 0; b < lambda.size(); ++b) {
      if (a == b) continue;
      const double denom = lambda[a] + lambda[b];
      if (denom <= cut) continue;
      const double diff = lambda[a] - lambda[b];
      sum += diff * diff / denom * weight[a][b];
    }
  return 2.0 * sum;
}

}  // namespace

double qfi(const ComplexMatrix& rho, const ComplexMatrix& h, const ToleranceConfig& tol) {
  const SpectralData data = spectral_data(rho, h, tol);
  return qfi_from_clusters(data.cluster_values, data.weight, data.max_eigenvalue,
                           tol.qfi_pair_cut);
}

double qfi_alt(const ComplexMatrix& rho, const ComplexMatrix& h, const ToleranceConfig& tol) {
  const SpectralData data = spectral_data(rho, h, tol);
  const double cut = tol.qfi_pair_cut * std::max(1e-300, data.max_eigenvalue);
  double sum = 0.0;
  for (std::size_t a = 0; a < data.cluster_values.size(); ++a)
    for (std::size_t b = 0; b < data.cluster_values.size(); ++b) {
      const double la = data.cluster_values[a], lb = data.cluster_values[b];
      if (la + lb <= cut) continue;
      sum += la * lb / (la + lb) * data.weight[a][b];
    }
  return 4.0 * real_expectation(rho, h * h) - 8.0 * sum;
}

double sep_bound(const ComplexMatrix& h1, const ComplexMatrix& h2) {
  double total = 0.0;
  for (const ComplexMatrix* h : {&h1, &h2}) {
    const EigenSystem es = hermitian_eig(*h);
    const double spread = es.eigenvalues.front() - es.eigenvalues.back();
    total += spread * spread;
  }
  return total;
}

double qfi_f1_analytic(std::size_t d) {
  if (d < 2) throw DomainError("qfi_f1_analytic: d must be >= 2");
  const double sd = std::sqrt(static_cast<double>(d));
  return 16.0 * sd / (1.0 + sd);
}

double qfi_noisy_analytic(std::size_t d, double p) {
  if (p < 0.0 || p > 1.0)
    throw DomainError("qfi_noisy_analytic: p must lie in [0,1], got " + std::to_string(p));
  const double sd = std::sqrt(static_cast<double>(d));
  const double p1 = sd / (1.0 + sd);
  return 2.0 * p1 * p * p / ((2.0 * p1 - 1.0) * p + 1.0) * qfi_f1_analytic(d);
}

double robustness_analytic(std::size_t d) {
  if (d < 2) throw DomainError("robustness_analytic: d must be >= 2");
  const double sd = std::sqrt(static_cast<double>(d));
  const double p1 = sd / (1.0 + sd);
  const double a = 2.0 * p1 - 1.0;
  return 1.0 - (a + std::sqrt(a * a + 16.0 * p1 * p1)) / (8.0 * p1 * p1);
}

double robustness_numeric(const ComplexMatrix& rho, const ComplexMatrix& h, double sep,
                          const ToleranceConfig& tol) {
  const SpectralData data = spectral_data(rho, h, tol);
  const std::size_t n = rho.rows();

  // The noisy state p rho + (1-p) I/n keeps rho's eigenvectors; only the
  // cluster values move, so one decomposition serves the whole bisection.
  auto qfi_at = [&](double p) {
    std::vector<double> shifted(data.cluster_values.size());
    const double off = (1.0 - p) / static_cast<double>(n);
    double max_l = 0.0;
    for (std::size_t a = 0; a < shifted.size(); ++a) {
      shifted[a] = p * data.cluster_values[a] + off;
      max_l = std::max(max_l, std::abs(shifted[a]));
    }
    return qfi_from_clusters(shifted, data.weight, max_l, tol.qfi_pair_cut);
  };

  if (qfi_at(1.0) <= sep)
    throw NotUsefulError("robustness_numeric: state does not beat the separable bound " +
                         std::to_string(sep));

  double lo = 0.0, hi = 1.0 - 1e-9;  // qfi_at(1-lo) > sep, qfi_at(1-hi) < sep
  while (hi - lo > tol.bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    (qfi_at(1.0 - mid) > sep ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ComplexMatrix sld(const ComplexMatrix& rho, const ComplexMatrix& h, const ToleranceConfig& tol) {
  if (!rho.is_square() || rho.rows() != h.rows() || h.rows() != h.cols())
    throw DimensionError("sld: state and Hamiltonian shapes disagree");
  const EigenSystem es = hermitian_eig(rho);
  const std::size_t n = rho.rows();
  const ComplexMatrix h_tilde = es.eigenvectors.adjoint() * (h * es.eigenvectors);

  double max_l = 0.0;
  for (double l : es.eigenvalues) max_l = std::max(max_l, std::abs(l));
  const double cut = tol.qfi_pair_cut * std::max(1e-300, max_l);

  ComplexMatrix m_tilde(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const double denom = es.eigenvalues[k] + es.eigenvalues[l];
      if (denom <= cut) continue;
      const double coeff = 2.0 * (es.eigenvalues[l] - es.eigenvalues[k]) / denom;
      m_tilde(k, l) = Complex(0.0, coeff) * h_tilde(k, l);
    }
  return (es.eigenvectors * (m_tilde * es.eigenvectors.adjoint())).hermitized();
}

double error_propagation(const ComplexMatrix& rho, const ComplexMatrix& m,
                         const ComplexMatrix& h) {
  const double slope = real_expectation(rho, commutator_i(m, h));
  if (std::abs(slope) <= 1e-12)
    throw DomainError("error_propagation: <i[M,H]> vanishes, estimator carries no signal");
  const double var = variance_of(rho, m);
  return var / (slope * slope);
}

double mean_of(const ComplexMatrix& rho, const ComplexMatrix& op) {
  return real_expectation(rho, op);
}

double variance_of(const ComplexMatrix& rho, const ComplexMatrix& op) {
  const double mean = real_expectation(rho, op);
  return real_expectation(rho, op * op) - mean * mean;
}

QfiReport make_qfi_report(const ComplexMatrix& rho, const ComplexMatrix& h,
                          const ComplexMatrix& h1, const ComplexMatrix& h2, std::size_t d,
                          const ToleranceConfig& tol) {
  QfiReport report;
  report.qfi = qfi(rho, h, tol);
  report.variance = variance_of(rho, h);
  report.mean_h = mean_of(rho, h);
  report.sep_bound = sep_bound(h1, h2);
  report.gain = report.sep_bound > 0.0 ? report.qfi / report.sep_bound : 0.0;
  report.d = d;
  return report;
}

}  // namespace pptmetro
