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

#ifndef PPTMETRO_ERRORS_HPP
#define PPTMETRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pptmetro {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix/tensor shape disagreements (non-square input, dims product mismatch, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain (p not in [0,1], bad permutation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested a state family at a dimension the construction does not cover.
/// The message names the supported set.
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine stopped before reaching its tolerance; carries the
/// final feasibility residuals so callers can decide what to do.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double psd, double ppt, double trace)
      : Error(what), psd_residual(psd), ppt_residual(ppt), trace_residual(trace) {}
  double psd_residual = 0.0;
  double ppt_residual = 0.0;
  double trace_residual = 0.0;
};

/// Robustness asked of a state that does not beat the separable bound.
class NotUsefulError : public Error {
 public:
  using Error::Error;
};

}  // namespace pptmetro

#endif  // PPTMETRO_ERRORS_HPP
