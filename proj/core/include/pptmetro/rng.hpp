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

#ifndef PPTMETRO_RNG_HPP
#define PPTMETRO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "pptmetro/complex_matrix.hpp"

namespace pptmetro {

/// Seeded random source. The uniform and Gaussian draws are built directly on
/// mt19937_64 output so sequences are identical across standard libraries
/// (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u == 0.0);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * M_PI * v;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Random Hermitian matrix with Gaussian entries, symmetrized.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

/// Random density matrix rho = G G^dagger / tr(G G^dagger), G complex Gaussian.
ComplexMatrix random_density_matrix(std::size_t n, Rng& rng);

}  // namespace pptmetro

#endif  // PPTMETRO_RNG_HPP
