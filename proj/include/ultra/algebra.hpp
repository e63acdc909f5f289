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

#ifndef ULTRA_ALGEBRA_HPP_
#define ULTRA_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultra/report.hpp"
#include "ultra/upset.hpp"

namespace ultra {

inline constexpr std::size_t kDefaultGeneratorCap = 16;

// A word x in {0,1}^n stored as a string of '0'/'1'; x[i] == '0' selects
// generator i, '1' its complement.
using Word = std::string;

struct Atom {
  Word word;
  UPSet set;
};

// The Boolean algebra generated by a finite list of UPSets. Atoms are the
// intersections over all generators of either the generator or its
// complement; they partition the naturals. Only the nonempty atoms are
// stored, every other word indexes the empty set.
class Algebra {
 public:
  // The trivial algebra {empty, N}: no generators, one atom N at the empty
  // word.
  Algebra();

  static Algebra span(const std::vector<UPSet>& generators,
                      std::size_t generator_cap = kDefaultGeneratorCap);

  // span(generators() ++ more), computed by refining the current atoms.
  Algebra extended(const std::vector<UPSet>& more,
                   std::size_t generator_cap = kDefaultGeneratorCap) const;

  const std::vector<UPSet>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  // Nonempty atoms sorted by word.
  const std::vector<Atom>& atoms() const { return atoms_; }

  // The atom at `word`, empty when not among the stored atoms.
  UPSet atom(const Word& word) const;
  // Index into atoms() of the atom containing n.
  std::size_t atom_index_of(std::uint64_t n) const;

  // Indices (into atoms()) of the atoms whose union is s, or absent when s
  // is not in the algebra.
  std::optional<std::vector<std::size_t>> decompose(const UPSet& s) const;
  bool contains_set(const UPSet& s) const { return decompose(s).has_value(); }

  UPSet union_of(const std::vector<std::size_t>& atom_indices) const;

 private:
  std::vector<UPSet> generators_;
  std::vector<Atom> atoms_;
};

inline Algebra span(const std::vector<UPSet>& generators,
                    std::size_t generator_cap = kDefaultGeneratorCap) {
  return Algebra::span(generators, generator_cap);
}

inline bool contains_set(const Algebra& a, const UPSet& s) {
  return a.contains_set(s);
}

// Checks that every n < bound lies in exactly one atom, that the atoms are
// pairwise disjoint and cover N, and that each atom sits on the correct side
// of every generator.
Report verify_partition(const Algebra& a, std::uint64_t bound);

}  // namespace ultra

#endif  // ULTRA_ALGEBRA_HPP_
