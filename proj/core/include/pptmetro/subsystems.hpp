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

#ifndef PPTMETRO_SUBSYSTEMS_HPP
#define PPTMETRO_SUBSYSTEMS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pptmetro/errors.hpp"

namespace pptmetro {

/// The four tensor factors of a key/shield state: key qubits A, B and shield
/// qudits A', B'. Plain bipartite matrices use just A and B.
enum class Subsystem { A, B, APrime, BPrime };

std::string_view subsystem_name(Subsystem s);

/// Which of the two standard subsystem orderings a matrix is stored in.
///   ABAB: A, B, A', B'   (key qubits first)
///   AABB: A, A', B, B'   (grouped per party, natural for bipartite cuts)
enum class SubsystemOrder { ABAB, AABB };

std::string_view order_name(SubsystemOrder order);

/// Ordered list of tensor factors attached to a square matrix.
struct SubsystemDims {
  std::vector<std::size_t> dims;
  std::vector<Subsystem> labels;

  std::size_t count() const { return dims.size(); }
  std::size_t total_dim() const;
  std::size_t index_of(Subsystem s) const;  // throws DomainError if absent
  bool has(Subsystem s) const;

  /// dims [2,2,d,d], labels A,B,A',B'.
  static SubsystemDims key_shield(std::size_t d);
  /// dims [2,d,2,d], labels A,A',B,B'.
  static SubsystemDims key_shield_grouped(std::size_t d);
  static SubsystemDims key_shield(std::size_t d, SubsystemOrder order);
  /// dims [da,db], labels A,B.
  static SubsystemDims bipartite(std::size_t da, std::size_t db);

  /// Dims after reorder_subsystems with the same permutation: slot k of the
  /// result holds subsystem perm[k] of this.
  SubsystemDims permuted(const std::vector<std::size_t>& perm) const;

  bool operator==(const SubsystemDims&) const = default;
};

/// Row-major strides for mixed-radix index <-> digit conversion.
std::vector<std::size_t> subsystem_strides(const std::vector<std::size_t>& dims);

void decompose_index(std::size_t index, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& strides, std::vector<std::size_t>& digits);

std::size_t compose_index(const std::vector<std::size_t>& digits,
                          const std::vector<std::size_t>& strides);

}  // namespace pptmetro

#endif  // PPTMETRO_SUBSYSTEMS_HPP
