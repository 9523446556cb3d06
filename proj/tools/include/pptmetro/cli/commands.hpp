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

#ifndef PPTMETRO_CLI_COMMANDS_HPP
#define PPTMETRO_CLI_COMMANDS_HPP

namespace pptmetro::cli {

// Exit codes: 0 success, 1 failed verification checks, 2 usage error,
// 3 file I/O error.
int run_cli(int argc, const char* const* argv);

}  // namespace pptmetro::cli

#endif  // PPTMETRO_CLI_COMMANDS_HPP
