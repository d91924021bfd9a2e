// Copyright 2026 The kdiverse Authors
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

#ifndef KDIVERSE_CLI_H_
#define KDIVERSE_CLI_H_

#include <ostream>

namespace kdiverse::cli {

// Exit codes of Run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConfig = 3;

// Command-line driver. Subcommands mincut, sm and lattice solve one input
// file and write a JSON report; oracle runs the exhaustive search on the
// same input; selftest runs every backend plus the oracle and compares.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kdiverse::cli

#endif  // KDIVERSE_CLI_H_
