// Copyright 2026 The rodcone Authors
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

#ifndef RODCONE_CLI_HPP_
#define RODCONE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rodcone {

inline constexpr int kExitRigid = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFlexible = 2;
inline constexpr int kExitDisagreement = 3;

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rodcone

#endif  // RODCONE_CLI_HPP_
