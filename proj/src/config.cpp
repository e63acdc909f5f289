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

#include "ultra/config.hpp"

#include <string>

#include "ultra/error.hpp"

namespace ultra {

void Config::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
  };
  require(max_precision > 0 && max_precision <= 60,
          "max_precision must lie in [1, 60]");
  require(fuel > 0, "fuel must be positive");
  require(generator_cap > 0 && generator_cap <= 64,
          "generator_cap must lie in [1, 64]");
  require(mu_bound > 0, "mu_bound must be positive");
}

}  // namespace ultra
