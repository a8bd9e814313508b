// Copyright 2026 The matmom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matmom::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

struct CommandResult {
    int exit_code = kPass;
    std::string report;     ///< JSON document for stdout (empty on input errors)
    std::string diagnostic; ///< message for stderr
};

/// args excludes the program name. Files named "-" are read from `in`.
CommandResult run(const std::vector<std::string> &args, std::istream &in);

} // namespace matmom::cli
