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

#ifndef ULTRA_CONFIG_HPP_
#define ULTRA_CONFIG_HPP_

#include <cstddef>
#include <cstdint>

#include "ultra/algebra.hpp"
#include "ultra/eliminate.hpp"
#include "ultra/eval.hpp"
#include "ultra/pfilter.hpp"
#include "ultra/ultralimit.hpp"

namespace ultra {

// Run settings shared by every command; echoed into each trace.
struct Config {
  TieBreak tiebreak = TieBreak::kGeneratorFirst;
  unsigned max_precision = kDefaultMaxPrecision;
  std::uint64_t fuel = kDefaultFuel;
  std::size_t generator_cap = kDefaultGeneratorCap;
  std::uint64_t seed = 0;
  std::uint64_t mu_bound = kDefaultMuBound;

  // Throws InvalidArgument when a cap is zero or out of range.
  void validate() const;

  FilterOptions filter_options() const { return {tiebreak, generator_cap}; }
  EvalOptions eval_options() const { return {fuel}; }
  UltralimitOptions ultralimit_options() const {
    return {filter_options(), max_precision};
  }
  EliminateOptions eliminate_options() const {
    return {filter_options(), eval_options(), mu_bound};
  }
};

}  // namespace ultra

#endif  // ULTRA_CONFIG_HPP_
