// Copyright 2026 The BitDepth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BITDEPTH_CLI_H_
#define BITDEPTH_CLI_H_

#include <iosfwd>

#include "bitdepth/error.h"

namespace bitdepth {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProcessing = 1;
inline constexpr int kExitUsage = 2;

// Bad input (missing files, malformed text, unmet preconditions) maps to
// kExitUsage; everything else to kExitProcessing.
int ExitCodeFor(ErrorKind kind);

// Entry point of the `bitdepth` tool. Reports go to `out`; failures print
// one line "bitdepth: error: <class>: <message>" to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace bitdepth

#endif  // BITDEPTH_CLI_H_
