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

// A naive substitution interpreter for closed, oracle-free terms. It shares
// only the syntax tree with the library; arithmetic and the recursor are
// implemented here directly from their defining equations.

#ifndef ULTRA_TESTS_REF_INTERP_HPP_
#define ULTRA_TESTS_REF_INTERP_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ultra/term.hpp"

namespace ultra::testing {

struct RefOverflow : std::runtime_error {
  RefOverflow() : std::runtime_error("reference arithmetic overflow") {}
};

// Normal form of a closed term: a numeral, a lambda, a certified value or a
// constant applied to too few arguments.
TermPtr ref_eval(const TermPtr& t);

// ref_eval(t) applied to the numerals in args; the result must be a numeral.
std::uint64_t ref_numeral(const TermPtr& t,
                          const std::vector<std::uint64_t>& args = {});

}  // namespace ultra::testing

#endif  // ULTRA_TESTS_REF_INTERP_HPP_
