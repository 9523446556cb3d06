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

#include "pptmetro/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pptmetro {

ComplexMatrix EigenSystem::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix scaled = eigenvectors;  // columns scaled by eigenvalues
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= eigenvalues[c];
  return scaled * eigenvectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex f = a(ar, ac);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

namespace {

void check_dims_match(const ComplexMatrix& m, const SubsystemDims& dims, const char* who) {
  if (!m.is_square()) throw DimensionError(std::string(who) + ": matrix is not square");
  if (dims.total_dim() != m.rows())
    throw DimensionError(std::string(who) + ": subsystem dims product " +
                         std::to_string(dims.total_dim()) + " != matrix dimension " +
                         std::to_string(m.rows()));
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemDims& dims,
                                const std::vector<Subsystem>& subsys) {
  check_dims_match(m, dims, "partial_transpose");
  std::vector<bool> flip(dims.count(), false);
  for (Subsystem s : subsys) flip[dims.index_of(s)] = true;

  const auto strides = subsystem_strides(dims.dims);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> rd, cd;
  for (std::size_t r = 0; r < n; ++r) {
    decompose_index(r, dims.dims, strides, rd);
    for (std::size_t c = 0; c < n; ++c) {
      decompose_index(c, dims.dims, strides, cd);
      std::size_t rr = 0, cc = 0;
      for (std::size_t k = 0; k < dims.count(); ++k) {
        const std::size_t rk = flip[k] ? cd[k] : rd[k];
        const std::size_t ck = flip[k] ? rd[k] : cd[k];
        rr += rk * strides[k];
        cc += ck * strides[k];
      }
      out(rr, cc) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims,
                            const std::vector<Subsystem>& traced_out) {
  check_dims_match(m, dims, "partial_trace");
  std::vector<bool> traced(dims.count(), false);
  for (Subsystem s : traced_out) traced[dims.index_of(s)] = true;

  std::vector<std::size_t> kept_dims, kept_pos, traced_dims, traced_pos;
  for (std::size_t k = 0; k < dims.count(); ++k) {
    if (traced[k]) {
      traced_dims.push_back(dims.dims[k]);
      traced_pos.push_back(k);
    } else {
      kept_dims.push_back(dims.dims[k]);
      kept_pos.push_back(k);
    }
  }
  const auto strides = subsystem_strides(dims.dims);
  const auto kept_strides = subsystem_strides(kept_dims);
  const auto traced_strides = subsystem_strides(traced_dims);
  std::size_t kept_total = 1, traced_total = 1;
  for (std::size_t d : kept_dims) kept_total *= d;
  for (std::size_t d : traced_dims) traced_total *= d;

  ComplexMatrix out(kept_total, kept_total);
  std::vector<std::size_t> kr, kc, td;
  for (std::size_t r = 0; r < kept_total; ++r) {
    decompose_index(r, kept_dims, kept_strides, kr);
    for (std::size_t c = 0; c < kept_total; ++c) {
      decompose_index(c, kept_dims, kept_strides, kc);
      Complex sum = 0.0;
      for (std::size_t t = 0; t < traced_total; ++t) {
        decompose_index(t, traced_dims, traced_strides, td);
        std::size_t rr = 0, cc = 0;
        for (std::size_t k = 0; k < kept_pos.size(); ++k) {
          rr += kr[k] * strides[kept_pos[k]];
          cc += kc[k] * strides[kept_pos[k]];
        }
        for (std::size_t k = 0; k < traced_pos.size(); ++k) {
          rr += td[k] * strides[traced_pos[k]];
          cc += td[k] * strides[traced_pos[k]];
        }
        sum += m(rr, cc);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

namespace {

// The Jacobi kernel works on split real/imaginary row-major arrays so the
// per-rotation row sweeps stay contiguous and vectorizable. Only rows p,q are
// recomputed by the rotation; Hermiticity supplies columns p,q. The
// eigenvector accumulator is kept transposed (row k = eigenvector k) for the
// same reason.
struct JacobiWorkspace {
  std::size_t n = 0;
  std::vector<double> are, aim;  // matrix being diagonalized
  std::vector<double> vre, vim;  // transposed eigenvector accumulator

  explicit JacobiWorkspace(const ComplexMatrix& m)
      : n(m.rows()), are(n * n), aim(n * n), vre(n * n, 0.0), vim(n * n, 0.0) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // Symmetrized load: (M + M^dagger)/2.
        const Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
        are[r * n + c] = z.real();
        aim[r * n + c] = z.imag();
      }
    for (std::size_t r = 0; r < n; ++r) vre[r * n + r] = 1.0;
  }

  double off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) {
        const std::size_t e = r * n + c;
        s += are[e] * are[e] + aim[e] * aim[e];
      }
    return std::sqrt(2.0 * s);
  }

  void rotate(std::size_t p, std::size_t q) {
    const std::size_t pn = p * n, qn = q * n;
    const double bre = are[pn + q], bim = aim[pn + q];
    const double babs = std::sqrt(bre * bre + bim * bim);
    const double ure = bre / babs, uim = bim / babs;  // phase of A(p,q)
    const double tau = (are[qn + q] - are[pn + p]) / (2.0 * babs);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const double uc_re = ure * c, uc_im = uim * c;
    const double us_re = ure * s, us_im = uim * s;

    // Left action J^dagger on rows p,q: row_p' = conj(u) c row_p - s row_q,
    // row_q' = conj(u) s row_p + c row_q.
    double* pr = are.data() + pn;
    double* pi = aim.data() + pn;
    double* qr = are.data() + qn;
    double* qi = aim.data() + qn;
    for (std::size_t k = 0; k < n; ++k) {
      const double xpr = pr[k], xpi = pi[k], xqr = qr[k], xqi = qi[k];
      pr[k] = uc_re * xpr + uc_im * xpi - s * xqr;
      pi[k] = uc_re * xpi - uc_im * xpr - s * xqi;
      qr[k] = us_re * xpr + us_im * xpi + c * xqr;
      qi[k] = us_re * xpi - us_im * xpr + c * xqi;
    }
    // Right action J touches columns p,q; inside rows p,q that is a 2x2 block
    // whose off-diagonal is zero by construction.
    {
      const double tpp_r = pr[p], tpp_i = pi[p], tpq_r = pr[q], tpq_i = pi[q];
      const double tqp_r = qr[p], tqp_i = qi[p], tqq_r = qr[q], tqq_i = qi[q];
      pr[p] = uc_re * tpp_r - uc_im * tpp_i - s * tpq_r;
      pi[p] = uc_re * tpp_i + uc_im * tpp_r - s * tpq_i;
      qr[q] = us_re * tqp_r - us_im * tqp_i + c * tqq_r;
      qi[q] = us_re * tqp_i + us_im * tqp_r + c * tqq_i;
      pr[q] = 0.0;
      pi[q] = 0.0;
      qr[p] = 0.0;
      qi[p] = 0.0;
    }
    // Mirror the updated rows into columns p,q.
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || k == q) continue;
      are[k * n + p] = pr[k];
      aim[k * n + p] = -pi[k];
      are[k * n + q] = qr[k];
      aim[k * n + q] = -qi[k];
    }

    double* wpr = vre.data() + pn;
    double* wpi = vim.data() + pn;
    double* wqr = vre.data() + qn;
    double* wqi = vim.data() + qn;
    for (std::size_t k = 0; k < n; ++k) {
      const double xpr = wpr[k], xpi = wpi[k], xqr = wqr[k], xqi = wqi[k];
      wpr[k] = uc_re * xpr - uc_im * xpi - s * xqr;
      wpi[k] = uc_re * xpi + uc_im * xpr - s * xqi;
      wqr[k] = us_re * xpr - us_im * xpi + c * xqr;
      wqi[k] = us_re * xpi + us_im * xpr + c * xqi;
    }
  }
};

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_eig: matrix is not square");
  const std::size_t n = m.rows();

  JacobiWorkspace w(m);
  double scale2 = 0.0;
  for (std::size_t e = 0; e < n * n; ++e)
    scale2 += w.are[e] * w.are[e] + w.aim[e] * w.aim[e];
  const double scale = std::sqrt(scale2);
  const double target = 1e-13 * scale;

  if (scale > 0.0) {
    const double skip2 = 1e-34 * scale2;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (w.off_diagonal_norm() <= target) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const std::size_t e = p * n + q;
          if (w.are[e] * w.are[e] + w.aim[e] * w.aim[e] <= skip2) continue;
          w.rotate(p, q);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return w.are[x * n + x] > w.are[y * n + y];
  });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    es.eigenvalues[c] = w.are[src * n + src];
    for (std::size_t r = 0; r < n; ++r)
      es.eigenvectors(r, c) = Complex(w.vre[src * n + r], w.vim[src * n + r]);
  }
  return es;
}

std::size_t matrix_rank(const ComplexMatrix& m, double rel_tol) {
  const EigenSystem es = hermitian_eig(m);
  double max_abs = 0.0;
  for (double l : es.eigenvalues) max_abs = std::max(max_abs, std::abs(l));
  if (max_abs == 0.0) return 0;
  std::size_t rank = 0;
  for (double l : es.eigenvalues)
    if (std::abs(l) > rel_tol * max_abs) ++rank;
  return rank;
}

double min_eigenvalue(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eig(m);
  return es.eigenvalues.back();
}

bool is_psd(const ComplexMatrix& m, double tol) {
  const EigenSystem es = hermitian_eig(m);
  double max_abs = 0.0;
  for (double l : es.eigenvalues) max_abs = std::max(max_abs, std::abs(l));
  return es.eigenvalues.empty() ||
         es.eigenvalues.back() >= -tol * std::max(1.0, max_abs);
}

ComplexMatrix hermitian_exp(const ComplexMatrix& k, double t) {
  if (!k.is_square()) throw DimensionError("hermitian_exp: matrix is not square");
  if (!k.is_hermitian(1e-10))
    throw DomainError("hermitian_exp: generator is not Hermitian within 1e-10");
  const EigenSystem es = hermitian_eig(k);
  const std::size_t n = k.rows();
  ComplexMatrix scaled = es.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::exp(Complex(0.0, -es.eigenvalues[c] * t));
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= phase;
  }
  return scaled * es.eigenvectors.adjoint();
}

namespace {

ComplexMatrix apply_spectral(const ComplexMatrix& m, double (*f)(double)) {
  const EigenSystem es = hermitian_eig(m);
  const std::size_t n = m.rows();
  ComplexMatrix scaled = es.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const double fl = f(es.eigenvalues[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= fl;
  }
  return (scaled * es.eigenvectors.adjoint()).hermitized();
}

}  // namespace

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  return apply_spectral(m, [](double l) { return l > 0.0 ? std::sqrt(l) : 0.0; });
}

ComplexMatrix psd_projection(const ComplexMatrix& m) {
  return apply_spectral(m, [](double l) { return l > 0.0 ? l : 0.0; });
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = rng.gaussian();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex z(rng.gaussian() * M_SQRT1_2, rng.gaussian() * M_SQRT1_2);
      h(r, c) = z;
      h(c, r) = std::conj(z);
    }
  }
  return h;
}

ComplexMatrix random_density_matrix(std::size_t n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  return (1.0 / tr) * rho;
}

}  // namespace pptmetro
