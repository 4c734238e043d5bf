// Copyright 2026 The rrfair Authors.
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


// The rrfair command-line tool. Goods print 1-based (g1..gm) while instance
// and profile documents are 0-based.

#ifndef RRFAIR_CLI_H_
#define RRFAIR_CLI_H_

#include <ostream>

namespace rrfair::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInputError = 2,
  kExitGuard = 3,
};

// Parses `argv` and runs one subcommand, writing reports to `out` and
// diagnostics to `err`. Returns the process exit code.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace rrfair::cli

#endif  // RRFAIR_CLI_H_
