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

#ifndef ULTRA_SETEXPR_HPP_
#define ULTRA_SETEXPR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ultra/eval.hpp"
#include "ultra/term.hpp"
#include "ultra/upset.hpp"

namespace ultra {

// Set expressions are type-1 terms `lam j:0. e` whose body depends on j
// only through numerals, add, sub, S, mul and mod by j-free factors, min,
// max, comparisons, connectives and if. Subterms not mentioning j (oracle
// calls included) are evaluated to numerals first. Such bodies are
// quasi-linear per residue class, so their zero sets are ultimately
// periodic and are computed exactly.

// Zero set of a function value through the set-expression analysis. Throws
// NonUPArgument when the function escapes the grammar.
UPSet analyze_set(Evaluator& ev, const Value& fn);

// Zero set of fn under a claimed (threshold, period), checked by sampling
// [0, threshold + 2 * period). Throws CertificateMismatch.
UPSet certified_set(Evaluator& ev, const Value& fn, std::uint64_t threshold,
                    std::uint64_t period);

// Evaluates a set-expression term under the inputs (its inner U, K and mu
// calls go to the oracles) and converts it to a UPSet.
UPSet to_upset(const TermPtr& set_expr, const Oracles& oracles,
               const std::map<std::string, std::uint64_t>& inputs = {},
               EvalOptions options = {});

// Static grammar check for a U or K set argument. Throws NonUPArgument with
// the offending subterm.
void check_set_expression(const TermPtr& arg);

struct USite {
  TermPtr arg;
  std::string key;  // alpha-normalized text, used for deduplication
};

// All distinct U arguments of t, inner sites before the sites containing
// them. A site may mention only free variables of t besides its own
// parameter.
std::vector<USite> collect_usites(const TermPtr& t);

}  // namespace ultra

#endif  // ULTRA_SETEXPR_HPP_
