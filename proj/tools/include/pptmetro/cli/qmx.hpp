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

#ifndef PPTMETRO_CLI_QMX_HPP
#define PPTMETRO_CLI_QMX_HPP

#include <string>

#include "pptmetro/complex_matrix.hpp"
#include "pptmetro/subsystems.hpp"

namespace pptmetro::cli {

/// File I/O failures and malformed QMX content.
class QmxError : public Error {
 public:
  using Error::Error;
};

struct QmxFile {
  SubsystemDims dims;
  ComplexMatrix matrix;
};

// Plain-text matrix container:
//   line 1: "QMX 1"
//   line 2: "dims: d1 d2 [d3 d4]"
//   line 3: "order: ABA'B'" | "AA'BB'" | "AB"
//   then one line per matrix row, entries "re,im" separated by spaces,
//   printed with 17 significant digits so doubles round-trip bit exactly.
void write_qmx(const std::string& path, const ComplexMatrix& matrix,
               const SubsystemDims& dims);

QmxFile read_qmx(const std::string& path);

std::string order_tag(const SubsystemDims& dims);

}  // namespace pptmetro::cli

#endif  // PPTMETRO_CLI_QMX_HPP
