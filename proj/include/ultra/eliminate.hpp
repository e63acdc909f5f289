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

#ifndef ULTRA_ELIMINATE_HPP_
#define ULTRA_ELIMINATE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ultra/eval.hpp"
#include "ultra/pfilter.hpp"
#include "ultra/report.hpp"
#include "ultra/term.hpp"
#include "ultra/upset.hpp"

namespace ultra {

using Inputs = std::map<std::string, std::uint64_t>;

struct EliminateOptions {
  FilterOptions filter;
  EvalOptions eval;
  std::uint64_t mu_bound = kDefaultMuBound;
};

struct Stage {
  std::string site;  // the U argument as printed
  UPSet set;         // its value against the previous stage's filter
  std::size_t generators_before = 0;
  std::size_t generators_after = 0;
  std::size_t atoms_before = 0;
  std::size_t atoms_after = 0;
  Word branch;  // after the stage
  UPSet core;
  bool member = false;  // set in the stage filter
  bool forced = false;  // set finite or cofinite
};

struct FilterTrace {
  std::vector<Stage> stages;
  PartialFilter filter;  // the final one
  std::vector<UPSet> u_queries;
  std::vector<std::pair<std::uint64_t, UPSet>> k_queries;
};

struct EliminateResult {
  std::uint64_t value = 0;
  FilterTrace trace;
};

// Builds partial filters along the U sites of t, inner sites first, each
// site resolved against the filter of the stages before it, then evaluates
// t with U answered by the final filter, K by k_prime and mu by a bounded
// search. Free variables of t take their values from inputs.
EliminateResult eliminate(const TermPtr& t, const Inputs& inputs,
                          const EliminateOptions& options = {});

// Evaluates t with every oracle call answered by a fixed filter.
std::uint64_t evaluate_with_filter(const TermPtr& t, const Inputs& inputs,
                                   const PartialFilter& f,
                                   const EliminateOptions& options = {});

// The quantifier-free matrix of the prenexed U axiom at (X, Y, n), with
// k = k_prime(n, X). F is extended by X and Y when they lie outside its
// algebra.
Report verify_uqf(const PartialFilter& f, const UPSet& x, const UPSet& y,
                  std::uint64_t n, const FilterOptions& options = {});

struct UqfInstance {
  UPSet x;
  UPSet y;
  std::uint64_t n;
};

// Instances built from the sets and numbers queried during the run: X and Y
// range over the queried sets, n over 0 and the K arguments.
std::vector<UqfInstance> traced_instances(const FilterTrace& trace);

// verify_uqf over every traced instance against the final filter.
Report verify_trace(const FilterTrace& trace,
                    const FilterOptions& options = {});

}  // namespace ultra

#endif  // ULTRA_ELIMINATE_HPP_
