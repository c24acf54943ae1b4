// Copyright 2026 The maxplus Authors
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

#ifndef MAXPLUS_CLI_H_
#define MAXPLUS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace maxplus {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSolverError = 3;
inline constexpr int kExitMismatch = 4;

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxplus

#endif  // MAXPLUS_CLI_H_
