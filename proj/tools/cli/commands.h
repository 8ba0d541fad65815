// Copyright 2026 The metriclat Authors.
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

#ifndef METRICLAT_TOOLS_CLI_COMMANDS_H_
#define METRICLAT_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace metriclat::cli {

enum ExitCode {
  kExitOk = 0,
  kExitParse = 1,
  kExitInvalidLattice = 2,
  kExitMismatch = 3,
  kExitViolation = 4,
};

// Runs one command line (args[0] is the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace metriclat::cli

#endif  // METRICLAT_TOOLS_CLI_COMMANDS_H_
