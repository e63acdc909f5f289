/* Copyright 2026 The Ultra Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ULTRA_CLI_HPP_
#define ULTRA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ultra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

// Runs one command; args excludes the program name. Results go to out as
// JSON, diagnostics to err. Domain errors are reported on err as
// {"error": {"kind": ..., "message": ...}}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ultra::cli

#endif  // ULTRA_CLI_HPP_
