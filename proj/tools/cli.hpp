// Copyright 2026 The qsw Authors.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsw::cli {

// Parses and executes one CLI invocation. Data goes to `out` (or the --out
// file), diagnostics to `err`. Returns 0 on success, 1 on a usage or domain
// error, 2 on an internal error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qsw::cli
