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

#ifndef ULTRA_ULTRALIMIT_HPP_
#define ULTRA_ULTRALIMIT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ultra/pfilter.hpp"
#include "ultra/report.hpp"
#include "ultra/upset.hpp"

namespace ultra {

using Rational = boost::rational<std::int64_t>;

inline constexpr unsigned kDefaultMaxPrecision = 24;

std::string rational_to_string(const Rational& q);
// Accepts "p/q", "p", or a decimal such as "0.375".
Rational parse_rational(const std::string& text);

// x_n = prefix[n] for n < |prefix|, else cycle[(n - |prefix|) mod |cycle|].
// All values lie in [0, 1].
class UPSeq {
 public:
  UPSeq(std::vector<Rational> prefix, std::vector<Rational> cycle);

  const std::vector<Rational>& prefix() const { return prefix_; }
  const std::vector<Rational>& cycle() const { return cycle_; }
  Rational at(std::uint64_t n) const;

 private:
  std::vector<Rational> prefix_;
  std::vector<Rational> cycle_;
};

// Index i of the dyadic cell [i/2^k, (i+1)/2^k) holding v; v = 1 lands in
// the extra top cell i = 2^k.
std::uint64_t cell_index(const Rational& v, unsigned level);
Rational cell_low(std::uint64_t index, unsigned level);
Rational cell_high(std::uint64_t index, unsigned level);

// A_{i,k} = {n : x_n in cell i at level k} for i = 0..2^k. Empty cells are
// not stored.
struct LevelSets {
  unsigned level = 0;
  std::map<std::uint64_t, UPSet> cells;

  std::uint64_t size() const { return (std::uint64_t{1} << level) + 1; }
  UPSet at(std::uint64_t i) const;
};

LevelSets level_sets(const UPSeq& seq, unsigned level,
                     unsigned max_level = kDefaultMaxPrecision);

struct TraceLevel {
  unsigned level;
  std::uint64_t choice;  // f(k)
  UPSet level_set;       // A_{f(k),k}
  std::uint64_t witness;  // g(k), the k-th element of the level set
  PartialFilter filter;   // snapshot after this level
};

struct DyadicTrace {
  std::vector<TraceLevel> levels;
};

struct UltralimitResult {
  Rational low;   // the limit lies in [low, high)
  Rational high;
  DyadicTrace trace;
  PartialFilter filter;
};

struct UltralimitOptions {
  FilterOptions filter;
  unsigned max_level = kDefaultMaxPrecision;
};

// Chooses, level by level, the unique level set in the (extended) filter.
UltralimitResult ultralimit(const UPSeq& seq, unsigned precision,
                            const PartialFilter& filter,
                            const UltralimitOptions& options = {});

// A_{f(k+1),k+1} is a subset of A_{f(k),k} and each chosen set is infinite.
Report verify_nesting(const DyadicTrace& trace);

// (g(k), x_{g(k)}) for every level of the trace.
std::vector<std::pair<std::uint64_t, Rational>> subsequence_witness(
    const DyadicTrace& trace, const UPSeq& seq);

// Each x_{g(k)} lies in its level-k cell and
// |x_{g(k)} - x_{g(k')}| <= 2^{-min(k,k')+1}.
Report verify_witness(const DyadicTrace& trace, const UPSeq& seq);

}  // namespace ultra

#endif  // ULTRA_ULTRALIMIT_HPP_
