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

#ifndef ULTRA_PFILTER_HPP_
#define ULTRA_PFILTER_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "ultra/algebra.hpp"
#include "ultra/report.hpp"
#include "ultra/upset.hpp"

namespace ultra {

// Which refinement of the core to keep when both are infinite.
enum class TieBreak {
  kGeneratorFirst,   // word bit 0, the generator itself
  kComplementFirst,  // word bit 1, the complement
};

std::string_view tiebreak_name(TieBreak t);
TieBreak parse_tiebreak(std::string_view name);

// A partial non-principal ultrafilter on a finitely generated algebra,
// determined by a branch word choosing one side of every generator. The
// selected atom is the core; a set of the algebra belongs to the filter iff
// it contains the core.
class PartialFilter {
 public:
  // The filter {N} on the trivial algebra.
  PartialFilter();

  // Builds a filter from a stored branch without checking the axioms; use
  // verify_axioms on the result. Throws InvalidArgument if the word length
  // does not match the generator count.
  static PartialFilter from_branch(Algebra algebra, Word branch);

  const Algebra& algebra() const { return *algebra_; }
  const Word& branch() const { return branch_; }
  const UPSet& core() const { return core_; }

  // Throws NotInAlgebra when s is outside the algebra.
  bool contains(const UPSet& s) const;

 private:
  std::shared_ptr<const Algebra> algebra_;
  Word branch_;
  UPSet core_;
};

inline PartialFilter trivial_filter() { return PartialFilter(); }

inline bool contains(const PartialFilter& f, const UPSet& s) {
  return f.contains(s);
}

struct FilterOptions {
  TieBreak tiebreak = TieBreak::kGeneratorFirst;
  std::size_t generator_cap = kDefaultGeneratorCap;
};

// Extends f to span(generators ++ new_generators), refining the core one
// generator at a time and keeping an infinite side. Memberships of sets in
// the old algebra are unchanged.
PartialFilter extend(const PartialFilter& f,
                     const std::vector<UPSet>& new_generators,
                     const FilterOptions& options = {});

// Like extend, but only adds the sets not already in the algebra.
PartialFilter extend_with_missing(const PartialFilter& f,
                                  const std::vector<UPSet>& sets,
                                  const FilterOptions& options = {});

struct Selection {
  std::size_t index;
  PartialFilter filter;
};

// For a partition of N into parts, extends f so every part is in its
// algebra and returns the unique part that belongs to the extension. Throws
// NotAPartition with a witness lying in zero or several parts.
Selection select_from_partition(const PartialFilter& f,
                                const std::vector<UPSet>& parts,
                                const FilterOptions& options = {});

// Checks the relativized ultrafilter clauses over the atom unions of the
// algebra: all of them when there are at most 2^10, else 1024 sampled with
// the given seed (pairs likewise capped at 1024).
Report verify_axioms(const PartialFilter& f, std::uint64_t seed = 0);

struct IndexFilter {
  std::vector<std::size_t> indices;
  Report report;
};

// {i : enumeration[i] in f}, with the index-set clauses checked over the
// enumeration. Throws NotInAlgebra naming the first offending index.
IndexFilter index_filter(const PartialFilter& f,
                         const std::vector<UPSet>& enumeration);

}  // namespace ultra

#endif  // ULTRA_PFILTER_HPP_
