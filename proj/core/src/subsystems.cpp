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

#include "pptmetro/subsystems.hpp"

namespace pptmetro {

std::string_view subsystem_name(Subsystem s) {
  switch (s) {
    case Subsystem::A: return "A";
    case Subsystem::B: return "B";
    case Subsystem::APrime: return "A'";
    case Subsystem::BPrime: return "B'";
  }
  return "?";
}

std::string_view order_name(SubsystemOrder order) {
  return order == SubsystemOrder::ABAB ? "ABA'B'" : "AA'BB'";
}

std::size_t SubsystemDims::total_dim() const {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

std::size_t SubsystemDims::index_of(Subsystem s) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return i;
  throw DomainError(std::string("subsystem ") + std::string(subsystem_name(s)) +
                    " not present in this factorization");
}

bool SubsystemDims::has(Subsystem s) const {
  for (Subsystem l : labels)
    if (l == s) return true;
  return false;
}

SubsystemDims SubsystemDims::key_shield(std::size_t d) {
  return {{2, 2, d, d}, {Subsystem::A, Subsystem::B, Subsystem::APrime, Subsystem::BPrime}};
}

SubsystemDims SubsystemDims::key_shield_grouped(std::size_t d) {
  return {{2, d, 2, d}, {Subsystem::A, Subsystem::APrime, Subsystem::B, Subsystem::BPrime}};
}

SubsystemDims SubsystemDims::key_shield(std::size_t d, SubsystemOrder order) {
  return order == SubsystemOrder::ABAB ? key_shield(d) : key_shield_grouped(d);
}

SubsystemDims SubsystemDims::bipartite(std::size_t da, std::size_t db) {
  return {{da, db}, {Subsystem::A, Subsystem::B}};
}

SubsystemDims SubsystemDims::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dims.size())
    throw DomainError("permuted: permutation length differs from subsystem count");
  std::vector<bool> seen(perm.size(), false);
  SubsystemDims out;
  out.dims.reserve(dims.size());
  out.labels.reserve(labels.size());
  for (std::size_t p : perm) {
    if (p >= dims.size() || seen[p]) throw DomainError("permuted: not a permutation");
    seen[p] = true;
    out.dims.push_back(dims[p]);
    out.labels.push_back(labels[p]);
  }
  return out;
}

std::vector<std::size_t> subsystem_strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

void decompose_index(std::size_t index, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& strides, std::vector<std::size_t>& digits) {
  digits.resize(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    digits[i] = (index / strides[i]) % dims[i];
  }
}

std::size_t compose_index(const std::vector<std::size_t>& digits,
                          const std::vector<std::size_t>& strides) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) index += digits[i] * strides[i];
  return index;
}

}  // namespace pptmetro
