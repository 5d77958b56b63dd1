// Copyright 2026 The ffsi Authors
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

#ifndef FFSI_CLI_APP_HPP
#define FFSI_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ffsi::cli {

enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitViolation = 2 };

/// Runs the ffsi command line with args excluding the program name.
/// Human-readable output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffsi::cli

#endif  // FFSI_CLI_APP_HPP
