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

#include "pptmetro/cli/qmx.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pptmetro::cli {

std::string order_tag(const SubsystemDims& dims) {
  std::string tag;
  for (Subsystem s : dims.labels) tag += subsystem_name(s);
  return tag;
}

namespace {

SubsystemDims dims_from_header(const std::vector<std::size_t>& sizes, const std::string& tag) {
  SubsystemDims dims;
  dims.dims = sizes;
  if (tag == "AB" && sizes.size() == 2) {
    dims.labels = {Subsystem::A, Subsystem::B};
  } else if (tag == "ABA'B'" && sizes.size() == 4) {
    dims.labels = {Subsystem::A, Subsystem::B, Subsystem::APrime, Subsystem::BPrime};
  } else if (tag == "AA'BB'" && sizes.size() == 4) {
    dims.labels = {Subsystem::A, Subsystem::APrime, Subsystem::B, Subsystem::BPrime};
  } else {
    throw QmxError("qmx: unknown order tag '" + tag + "' for " +
                   std::to_string(sizes.size()) + " subsystems");
  }
  return dims;
}

}  // namespace

void write_qmx(const std::string& path, const ComplexMatrix& matrix,
               const SubsystemDims& dims) {
  if (!matrix.is_square() || matrix.rows() != dims.total_dim())
    throw QmxError("qmx: dims do not match the matrix dimension");

  std::ofstream out(path);
  if (!out) throw QmxError("qmx: cannot open '" + path + "' for writing");

  out << "QMX 1\n";
  out << "dims:";
  for (std::size_t d : dims.dims) out << ' ' << d;
  out << "\norder: " << order_tag(dims) << "\n";

  char buf[64];
  const std::size_t n = matrix.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = matrix(r, c);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
      out << buf << (c + 1 < n ? " " : "");
    }
    out << '\n';
  }
  if (!out) throw QmxError("qmx: write to '" + path + "' failed");
}

QmxFile read_qmx(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QmxError("qmx: cannot open '" + path + "' for reading");

  std::string line;
  if (!std::getline(in, line) || line != "QMX 1")
    throw QmxError("qmx: '" + path + "' does not start with a QMX 1 header");

  if (!std::getline(in, line) || line.rfind("dims:", 0) != 0)
    throw QmxError("qmx: missing dims line");
  std::vector<std::size_t> sizes;
  {
    std::istringstream fields(line.substr(5));
    for (long long v = 0; fields >> v;) {
      if (v <= 0) throw QmxError("qmx: non-positive subsystem dimension");
      sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.size() != 2 && sizes.size() != 4)
      throw QmxError("qmx: expected 2 or 4 subsystem dimensions");
  }

  if (!std::getline(in, line) || line.rfind("order: ", 0) != 0)
    throw QmxError("qmx: missing order line");
  QmxFile file;
  file.dims = dims_from_header(sizes, line.substr(7));

  const std::size_t n = file.dims.total_dim();
  file.matrix = ComplexMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::getline(in, line)) throw QmxError("qmx: truncated payload");
    std::istringstream fields(line);
    std::string entry;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(fields >> entry)) throw QmxError("qmx: short row " + std::to_string(r));
      const std::size_t comma = entry.find(',');
      if (comma == std::string::npos) throw QmxError("qmx: malformed entry '" + entry + "'");
      try {
        file.matrix(r, c) = Complex(std::stod(entry.substr(0, comma)),
                                    std::stod(entry.substr(comma + 1)));
      } catch (const std::exception&) {
        throw QmxError("qmx: malformed entry '" + entry + "'");
      }
    }
  }
  return file;
}

}  // namespace pptmetro::cli
