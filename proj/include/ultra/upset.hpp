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

#ifndef ULTRA_UPSET_HPP_
#define ULTRA_UPSET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ultra {

// Periods beyond this (after taking lcms) and thresholds beyond
// kThresholdCap raise ErrorKind::kPeriodOverflow.
inline constexpr std::uint64_t kPeriodCap = 1'000'000;
inline constexpr std::uint64_t kThresholdCap = 10'000'000;

// An ultimately periodic subset of the naturals, always held in canonical
// form: for n < threshold membership is read from an explicit prefix, for
// n >= threshold it depends only on n mod period. Residues are absolute
// (taken of n itself, not of n - threshold). The period is the least period
// of the residue word and the threshold cannot be lowered without changing
// the denoted set, so two UPSets are equal iff their fields are equal.
class UPSet {
 public:
  // The empty set.
  UPSet();

  static UPSet empty() { return UPSet(); }
  static UPSet naturals();
  static UPSet finite(const std::vector<std::uint64_t>& members);
  // {n : n mod period in residues}.
  static UPSet residue_class(std::uint64_t period,
                             const std::vector<std::uint64_t>& residues);
  // {n : n >= start}.
  static UPSet at_least(std::uint64_t start);

  // Accepts non-canonical input and canonicalizes. Exceptions must be below
  // the threshold and residues below the period.
  static UPSet from_parts(const std::vector<std::uint64_t>& exceptions,
                          std::uint64_t threshold, std::uint64_t period,
                          const std::vector<std::uint64_t>& residues);

  // threshold = prefix.size(); residue_bits.size() is the period and is
  // indexed by absolute residue.
  static UPSet from_bits(std::vector<bool> prefix,
                         std::vector<bool> residue_bits);

  bool member(std::uint64_t n) const;

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  // Members below the threshold.
  std::vector<std::uint64_t> exceptions() const;
  std::vector<std::uint64_t> residues() const;
  bool residue_bit(std::uint64_t r) const { return residues_[r % period_]; }

  bool is_infinite() const;
  bool is_empty() const;
  // Number of elements; absent for infinite sets.
  std::optional<std::uint64_t> cardinality() const;

  std::string to_string() const;

  friend bool operator==(const UPSet&, const UPSet&) = default;

 private:
  UPSet(std::vector<bool> prefix, std::vector<bool> residues);
  void canonicalize();

  std::uint64_t threshold_ = 0;
  std::uint64_t period_ = 1;
  std::vector<bool> prefix_;    // size threshold_
  std::vector<bool> residues_;  // size period_
};

UPSet complement(const UPSet& s);
UPSet intersect(const UPSet& s, const UPSet& t);
UPSet unite(const UPSet& s, const UPSet& t);
UPSet difference(const UPSet& s, const UPSet& t);

bool equals(const UPSet& s, const UPSet& t);
bool subset(const UPSet& s, const UPSet& t);
inline bool is_infinite(const UPSet& s) { return s.is_infinite(); }

// max(thresholds) + lcm(periods): pointwise agreement below this bound
// decides equality of the two sets.
std::uint64_t decision_bound(const UPSet& s, const UPSet& t);

// 0-based: kth_element(S, 0) is the least member. Throws NotEnoughElements
// when S has at most k elements.
std::uint64_t kth_element(const UPSet& s, std::uint64_t k);
// Least member strictly above n.
std::optional<std::uint64_t> least_above(const UPSet& s, std::uint64_t n);

// lcm with the kPeriodCap check.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace ultra

#endif  // ULTRA_UPSET_HPP_
