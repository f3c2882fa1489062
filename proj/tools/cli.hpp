// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The risq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISQ_TOOLS_CLI_HPP
#define RISQ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace risq::cli
{
    enum ExitCode : int
    {
        kSuccess = 0,
        kConfigError = 1,
        kInfeasible = 2,
    };

    // args excludes the program name. Results go to `out` (or the --out file), diagnostics to `err`.
    int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace risq::cli

#endif
