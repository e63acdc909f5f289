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

#include "ultra/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "ultra/error.hpp"

namespace ultra {
namespace {

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap) {
    throw Error(ErrorKind::kGeneratorCap,
                "algebra would have " + std::to_string(count) +
                    " generators, cap is " + std::to_string(cap));
  }
}

}  // namespace

Algebra::Algebra() { atoms_.push_back({Word(), UPSet::naturals()}); }

Algebra Algebra::span(const std::vector<UPSet>& generators,
                      std::size_t generator_cap) {
  return Algebra().extended(generators, generator_cap);
}

Algebra Algebra::extended(const std::vector<UPSet>& more,
                          std::size_t generator_cap) const {
  check_cap(generators_.size() + more.size(), generator_cap);
  Algebra out = *this;
  for (const auto& g : more) {
    const UPSet not_g = complement(g);
    std::vector<Atom> refined;
    refined.reserve(out.atoms_.size() * 2);
    for (const auto& atom : out.atoms_) {
      UPSet in = intersect(atom.set, g);
      UPSet out_part = intersect(atom.set, not_g);
      if (!in.is_empty()) refined.push_back({atom.word + '0', std::move(in)});
      if (!out_part.is_empty()) {
        refined.push_back({atom.word + '1', std::move(out_part)});
      }
    }
    std::sort(refined.begin(), refined.end(),
              [](const Atom& a, const Atom& b) { return a.word < b.word; });
    out.atoms_ = std::move(refined);
    out.generators_.push_back(g);
  }
  return out;
}

UPSet Algebra::atom(const Word& word) const {
  if (word.size() != generators_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "word '" + word + "' has length " +
                    std::to_string(word.size()) + ", algebra has " +
                    std::to_string(generators_.size()) + " generators");
  }
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), word,
      [](const Atom& a, const Word& w) { return a.word < w; });
  if (it != atoms_.end() && it->word == word) return it->set;
  return UPSet::empty();
}

std::size_t Algebra::atom_index_of(std::uint64_t n) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].set.member(n)) return i;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no atom contains " + std::to_string(n));
}

std::optional<std::vector<std::size_t>> Algebra::decompose(
    const UPSet& s) const {
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const UPSet& a = atoms_[i].set;
    if (subset(a, s)) {
      selected.push_back(i);
    } else if (!intersect(a, s).is_empty()) {
      return std::nullopt;
    }
  }
  return selected;
}

UPSet Algebra::union_of(const std::vector<std::size_t>& atom_indices) const {
  UPSet out;
  for (auto i : atom_indices) out = unite(out, atoms_.at(i).set);
  return out;
}

Report verify_partition(const Algebra& a, std::uint64_t bound) {
  Report report;
  const auto& atoms = a.atoms();

  auto& pointwise = report.add("pointwise-unique");
  for (std::uint64_t n = 0; n < bound && pointwise.passed; ++n) {
    std::size_t hits = 0;
    for (const auto& atom : atoms) hits += atom.set.member(n) ? 1 : 0;
    if (hits != 1) {
      fail_once(pointwise, std::to_string(n) + " lies in " +
                               std::to_string(hits) + " atoms");
    }
  }

  auto& disjoint = report.add("pairwise-disjoint");
  for (std::size_t i = 0; i < atoms.size() && disjoint.passed; ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      UPSet both = intersect(atoms[i].set, atoms[j].set);
      if (!both.is_empty()) {
        fail_once(disjoint, "atoms " + atoms[i].word + " and " +
                                atoms[j].word + " share " +
                                both.to_string());
        break;
      }
    }
  }

  auto& cover = report.add("covers-N");
  UPSet all;
  for (const auto& atom : atoms) all = unite(all, atom.set);
  if (all != UPSet::naturals()) {
    fail_once(cover, "union of atoms misses " +
                         complement(all).to_string());
  }

  auto& sides = report.add("generator-sides");
  const auto& gens = a.generators();
  for (const auto& atom : atoms) {
    if (!sides.passed) break;
    if (atom.word.size() != gens.size()) {
      fail_once(sides, "atom word " + atom.word + " has wrong length");
      break;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const UPSet side = atom.word[i] == '0' ? gens[i] : complement(gens[i]);
      if (!subset(atom.set, side)) {
        fail_once(sides, "atom " + atom.word + " not inside side of generator " +
                             std::to_string(i));
        break;
      }
    }
  }
  return report;
}

}  // namespace ultra
