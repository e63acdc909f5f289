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

#include "ultra/pfilter.hpp"

#include <random>
#include <utility>

#include "ultra/error.hpp"

namespace ultra {
namespace {

constexpr std::size_t kFullEnumerationAtoms = 10;
constexpr std::size_t kSampleCount = 1024;

std::uint64_t least_element(const UPSet& s) { return kth_element(s, 0); }

// A set of the algebra given as a selection of atoms.
struct AtomUnion {
  std::vector<bool> selection;
  UPSet set;
};

}  // namespace

std::string_view tiebreak_name(TieBreak t) {
  return t == TieBreak::kGeneratorFirst ? "bit-0" : "complement-first";
}

TieBreak parse_tiebreak(std::string_view name) {
  if (name == "bit-0") return TieBreak::kGeneratorFirst;
  if (name == "complement-first") return TieBreak::kComplementFirst;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown tiebreak '" + std::string(name) +
                  "' (expected bit-0 or complement-first)");
}

PartialFilter::PartialFilter()
    : algebra_(std::make_shared<const Algebra>()),
      core_(UPSet::naturals()) {}

PartialFilter PartialFilter::from_branch(Algebra algebra, Word branch) {
  PartialFilter f;
  f.core_ = algebra.atom(branch);
  f.algebra_ = std::make_shared<const Algebra>(std::move(algebra));
  f.branch_ = std::move(branch);
  return f;
}

bool PartialFilter::contains(const UPSet& s) const {
  if (!algebra_->contains_set(s)) {
    throw Error(ErrorKind::kNotInAlgebra,
                "set " + s.to_string() + " is not in the filter's algebra");
  }
  return subset(core_, s);
}

PartialFilter extend(const PartialFilter& f,
                     const std::vector<UPSet>& new_generators,
                     const FilterOptions& options) {
  Algebra algebra =
      f.algebra().extended(new_generators, options.generator_cap);
  Word branch = f.branch();
  UPSet core = f.core();
  for (const auto& g : new_generators) {
    UPSet in = intersect(core, g);
    UPSet out = difference(core, g);
    const bool in_ok = in.is_infinite();
    const bool out_ok = out.is_infinite();
    if (!in_ok && !out_ok) {
      throw Error(ErrorKind::kInvalidArgument,
                  "filter core " + f.core().to_string() +
                      " is finite; cannot extend");
    }
    bool take_in = in_ok;
    if (in_ok && out_ok) {
      take_in = options.tiebreak == TieBreak::kGeneratorFirst;
    }
    branch.push_back(take_in ? '0' : '1');
    core = take_in ? std::move(in) : std::move(out);
  }
  PartialFilter out = PartialFilter::from_branch(std::move(algebra), branch);
  return out;
}

PartialFilter extend_with_missing(const PartialFilter& f,
                                  const std::vector<UPSet>& sets,
                                  const FilterOptions& options) {
  std::vector<UPSet> missing;
  Algebra probe = f.algebra();
  for (const auto& s : sets) {
    if (probe.contains_set(s)) continue;
    missing.push_back(s);
    probe = probe.extended({s}, SIZE_MAX);
  }
  if (missing.empty()) return f;
  return extend(f, missing, options);
}

Selection select_from_partition(const PartialFilter& f,
                                const std::vector<UPSet>& parts,
                                const FilterOptions& options) {
  if (parts.empty()) {
    throw Error(ErrorKind::kNotAPartition, "empty partition misses 0");
  }
  UPSet covered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      UPSet both = intersect(parts[i], parts[j]);
      if (!both.is_empty()) {
        throw Error(ErrorKind::kNotAPartition,
                    std::to_string(least_element(both)) + " lies in parts " +
                        std::to_string(i) + " and " + std::to_string(j));
      }
    }
    covered = unite(covered, parts[i]);
  }
  UPSet missed = complement(covered);
  if (!missed.is_empty()) {
    throw Error(ErrorKind::kNotAPartition,
                std::to_string(least_element(missed)) + " lies in no part");
  }

  PartialFilter extended = extend_with_missing(f, parts, options);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (extended.contains(parts[i])) chosen.push_back(i);
  }
  if (chosen.size() != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                std::to_string(chosen.size()) +
                    " parts belong to the extended filter; expected exactly "
                    "one");
  }
  return {chosen.front(), std::move(extended)};
}

Report verify_axioms(const PartialFilter& f, std::uint64_t seed) {
  const Algebra& algebra = f.algebra();
  const auto& atoms = algebra.atoms();
  const UPSet& core = f.core();
  auto in_filter = [&core](const UPSet& s) { return subset(core, s); };

  std::vector<std::vector<bool>> selections;
  if (atoms.size() <= kFullEnumerationAtoms) {
    const std::uint64_t total = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<bool> sel(atoms.size());
      for (std::size_t i = 0; i < atoms.size(); ++i) sel[i] = (mask >> i) & 1;
      selections.push_back(std::move(sel));
    }
  } else {
    std::mt19937_64 rng(seed);
    selections.push_back(std::vector<bool>(atoms.size(), false));
    selections.push_back(std::vector<bool>(atoms.size(), true));
    while (selections.size() < kSampleCount) {
      std::vector<bool> sel(atoms.size());
      for (std::size_t i = 0; i < atoms.size(); ++i) sel[i] = rng() & 1;
      selections.push_back(std::move(sel));
    }
  }

  std::vector<AtomUnion> unions;
  unions.reserve(selections.size());
  for (auto& sel : selections) {
    UPSet s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (sel[i]) s = unite(s, atoms[i].set);
    }
    unions.push_back({std::move(sel), std::move(s)});
  }
  std::vector<bool> member(unions.size());
  for (std::size_t i = 0; i < unions.size(); ++i) {
    member[i] = in_filter(unions[i].set);
  }

  Report report;
  auto& dichotomy = report.add("complement-dichotomy");
  auto& upward = report.add("intersection-upward");
  auto& closure = report.add("intersection-closure");
  auto& nonprincipal = report.add("non-principal");
  auto& normalization = report.add("characteristic-normalization");
  normalization.detail =
      "membership is read from canonical UPSets; characteristic functions "
      "are normalized at the term boundary";

  for (std::size_t i = 0; i < unions.size(); ++i) {
    const UPSet& s = unions[i].set;
    const bool in_s = member[i];
    const bool in_not_s = in_filter(complement(s));
    if (in_s == in_not_s) {
      fail_once(dichotomy, "set " + s.to_string() +
                               (in_s ? ": both it and its complement are in "
                                       "the filter"
                                     : ": neither it nor its complement is "
                                       "in the filter"));
    }
    if (in_s && !s.is_infinite()) {
      fail_once(nonprincipal,
                "finite set " + s.to_string() + " is in the filter");
    }
  }

  auto check_pair = [&](std::size_t i, std::size_t j) {
    const UPSet both = intersect(unions[i].set, unions[j].set);
    const bool in_both = in_filter(both);
    if (in_both && !member[j]) {
      fail_once(upward, "intersection of " + unions[i].set.to_string() +
                            " and " + unions[j].set.to_string() +
                            " is in the filter but the second set is not");
    }
    if (member[i] && member[j] && !in_both) {
      fail_once(closure, "sets " + unions[i].set.to_string() + " and " +
                             unions[j].set.to_string() +
                             " are in the filter but their intersection is "
                             "not");
    }
  };
  const std::size_t n = unions.size();
  if (n * n <= kSampleCount) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) check_pair(i, j);
    }
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < kSampleCount; ++k) {
      check_pair(rng() % n, rng() % n);
    }
  }
  return report;
}

IndexFilter index_filter(const PartialFilter& f,
                         const std::vector<UPSet>& enumeration) {
  IndexFilter out;
  std::vector<bool> in(enumeration.size());
  for (std::size_t i = 0; i < enumeration.size(); ++i) {
    if (!f.algebra().contains_set(enumeration[i])) {
      throw Error(ErrorKind::kNotInAlgebra,
                  "enumeration entry " + std::to_string(i) +
                      " is not in the filter's algebra");
    }
    in[i] = f.contains(enumeration[i]);
    if (in[i]) out.indices.push_back(i);
  }

  auto& pairs = out.report.add("complement-pair-coverage");
  auto& upward = out.report.add("subset-upward-closure");
  auto& closure = out.report.add("intersection-closure");
  auto& nonprincipal = out.report.add("non-principal");
  const std::size_t n = enumeration.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i] && !enumeration[i].is_infinite()) {
      fail_once(nonprincipal, "index " + std::to_string(i) +
                                  " is in F but denotes a finite set");
    }
    const UPSet not_i = complement(enumeration[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where =
          "indices " + std::to_string(i) + ", " + std::to_string(j);
      if (enumeration[j] == not_i && !in[i] && !in[j]) {
        fail_once(pairs, where + ": complementary, neither in F");
      }
      if (in[i] && !in[j] && subset(enumeration[i], enumeration[j])) {
        fail_once(upward, where + ": subset of an F-member missing from F");
      }
      if (in[i] && in[j]) {
        const UPSet both = intersect(enumeration[i], enumeration[j]);
        for (std::size_t k = 0; k < n; ++k) {
          if (!in[k] && enumeration[k] == both) {
            fail_once(closure, where + ": intersection at index " +
                                   std::to_string(k) + " missing from F");
          }
        }
      }
    }
  }
  return out;
}

}  // namespace ultra
