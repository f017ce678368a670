// Copyright 2026 The Libra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIBRA_TOOLS_CLI_H_
#define LIBRA_TOOLS_CLI_H_

#include <iosfwd>

namespace libra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotAnonymizable = 1;
inline constexpr int kExitUsage = 2;  // also I/O and parse failures

// Entry point shared by the libra binary and the tests. `out` receives
// evaluate results and any file content sent to "-"; `err` receives usage,
// warnings and diagnostics.
int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace libra::cli

#endif  // LIBRA_TOOLS_CLI_H_
