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

#include "ultra/upset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "ultra/error.hpp"

namespace ultra {
namespace {

void check_threshold(std::uint64_t threshold) {
  if (threshold > kThresholdCap) {
    throw Error(ErrorKind::kPeriodOverflow,
                "threshold " + std::to_string(threshold) + " exceeds cap " +
                    std::to_string(kThresholdCap));
  }
}

template <typename Op>
UPSet combine(const UPSet& s, const UPSet& t, Op op) {
  const std::uint64_t threshold = std::max(s.threshold(), t.threshold());
  const std::uint64_t period = checked_lcm(s.period(), t.period());
  std::vector<bool> prefix(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) {
    prefix[n] = op(s.member(n), t.member(n));
  }
  std::vector<bool> residues(period);
  for (std::uint64_t r = 0; r < period; ++r) {
    residues[r] = op(s.residue_bit(r), t.residue_bit(r));
  }
  return UPSet::from_bits(std::move(prefix), std::move(residues));
}

}  // namespace

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t l = a / g;
  if (l != 0 && b > kPeriodCap / l) {
    throw Error(ErrorKind::kPeriodOverflow,
                "lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                    ") exceeds period cap " + std::to_string(kPeriodCap));
  }
  return l * b;
}

UPSet::UPSet() : threshold_(0), period_(1), residues_(1, false) {}

UPSet::UPSet(std::vector<bool> prefix, std::vector<bool> residues)
    : threshold_(prefix.size()),
      period_(residues.size()),
      prefix_(std::move(prefix)),
      residues_(std::move(residues)) {
  canonicalize();
}

void UPSet::canonicalize() {
  // Least period of the residue word; it always divides the current one.
  for (std::uint64_t d = 1; d < period_; ++d) {
    if (period_ % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t i = d; i < period_ && periodic; ++i) {
      periodic = residues_[i] == residues_[i % d];
    }
    if (periodic) {
      residues_.resize(d);
      period_ = d;
      break;
    }
  }
  while (threshold_ > 0 &&
         prefix_[threshold_ - 1] == residues_[(threshold_ - 1) % period_]) {
    --threshold_;
  }
  prefix_.resize(threshold_);
}

UPSet UPSet::naturals() { return UPSet({}, {true}); }

UPSet UPSet::finite(const std::vector<std::uint64_t>& members) {
  std::uint64_t threshold = 0;
  for (auto m : members) threshold = std::max(threshold, m + 1);
  check_threshold(threshold);
  std::vector<bool> prefix(threshold);
  for (auto m : members) prefix[m] = true;
  return UPSet(std::move(prefix), {false});
}

UPSet UPSet::residue_class(std::uint64_t period,
                           const std::vector<std::uint64_t>& residues) {
  return from_parts({}, 0, period, residues);
}

UPSet UPSet::at_least(std::uint64_t start) {
  check_threshold(start);
  return UPSet(std::vector<bool>(start, false), {true});
}

UPSet UPSet::from_parts(const std::vector<std::uint64_t>& exceptions,
                        std::uint64_t threshold, std::uint64_t period,
                        const std::vector<std::uint64_t>& residues) {
  if (period == 0) {
    throw Error(ErrorKind::kInvalidArgument, "period must be at least 1");
  }
  if (period > kPeriodCap) {
    throw Error(ErrorKind::kPeriodOverflow,
                "period " + std::to_string(period) + " exceeds cap");
  }
  check_threshold(threshold);
  std::vector<bool> prefix(threshold);
  for (auto e : exceptions) {
    if (e >= threshold) {
      throw Error(ErrorKind::kInvalidArgument,
                  "exception " + std::to_string(e) +
                      " is not below threshold " + std::to_string(threshold));
    }
    prefix[e] = true;
  }
  std::vector<bool> bits(period);
  for (auto r : residues) {
    if (r >= period) {
      throw Error(ErrorKind::kInvalidArgument,
                  "residue " + std::to_string(r) + " is not below period " +
                      std::to_string(period));
    }
    bits[r] = true;
  }
  return UPSet(std::move(prefix), std::move(bits));
}

UPSet UPSet::from_bits(std::vector<bool> prefix,
                       std::vector<bool> residue_bits) {
  if (residue_bits.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "period must be at least 1");
  }
  if (residue_bits.size() > kPeriodCap) {
    throw Error(ErrorKind::kPeriodOverflow, "period exceeds cap");
  }
  check_threshold(prefix.size());
  return UPSet(std::move(prefix), std::move(residue_bits));
}

bool UPSet::member(std::uint64_t n) const {
  if (n < threshold_) return prefix_[n];
  return residues_[n % period_];
}

std::vector<std::uint64_t> UPSet::exceptions() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < threshold_; ++n) {
    if (prefix_[n]) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> UPSet::residues() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < period_; ++r) {
    if (residues_[r]) out.push_back(r);
  }
  return out;
}

bool UPSet::is_infinite() const {
  return std::find(residues_.begin(), residues_.end(), true) !=
         residues_.end();
}

bool UPSet::is_empty() const { return threshold_ == 0 && !is_infinite(); }

std::optional<std::uint64_t> UPSet::cardinality() const {
  if (is_infinite()) return std::nullopt;
  return static_cast<std::uint64_t>(
      std::count(prefix_.begin(), prefix_.end(), true));
}

std::string UPSet::to_string() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<std::uint64_t>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ',';
      os << xs[i];
    }
    os << ']';
  };
  os << "{exceptions: ";
  list(exceptions());
  os << ", threshold: " << threshold_ << ", period: " << period_
     << ", residues: ";
  list(residues());
  os << '}';
  return os.str();
}

UPSet complement(const UPSet& s) {
  std::vector<bool> prefix(s.threshold());
  for (std::uint64_t n = 0; n < s.threshold(); ++n) prefix[n] = !s.member(n);
  std::vector<bool> residues(s.period());
  for (std::uint64_t r = 0; r < s.period(); ++r) {
    residues[r] = !s.residue_bit(r);
  }
  return UPSet::from_bits(std::move(prefix), std::move(residues));
}

UPSet intersect(const UPSet& s, const UPSet& t) {
  return combine(s, t, [](bool a, bool b) { return a && b; });
}

UPSet unite(const UPSet& s, const UPSet& t) {
  return combine(s, t, [](bool a, bool b) { return a || b; });
}

UPSet difference(const UPSet& s, const UPSet& t) {
  return combine(s, t, [](bool a, bool b) { return a && !b; });
}

bool equals(const UPSet& s, const UPSet& t) { return s == t; }

bool subset(const UPSet& s, const UPSet& t) {
  return difference(s, t).is_empty();
}

std::uint64_t decision_bound(const UPSet& s, const UPSet& t) {
  return std::max(s.threshold(), t.threshold()) +
         checked_lcm(s.period(), t.period());
}

std::uint64_t kth_element(const UPSet& s, std::uint64_t k) {
  const std::uint64_t threshold = s.threshold();
  for (std::uint64_t n = 0; n < threshold; ++n) {
    if (s.member(n)) {
      if (k == 0) return n;
      --k;
    }
  }
  // Offsets from the threshold of the members in one tail period.
  std::vector<std::uint64_t> offsets;
  for (std::uint64_t o = 0; o < s.period(); ++o) {
    if (s.residue_bit(threshold + o)) offsets.push_back(o);
  }
  if (offsets.empty()) {
    throw Error(ErrorKind::kNotEnoughElements,
                "set " + s.to_string() + " has too few elements");
  }
  const std::uint64_t cycles = k / offsets.size();
  if (cycles > (UINT64_MAX - threshold - s.period()) / s.period()) {
    throw Error(ErrorKind::kArithmeticOverflow, "kth_element out of range");
  }
  return threshold + cycles * s.period() + offsets[k % offsets.size()];
}

std::optional<std::uint64_t> least_above(const UPSet& s, std::uint64_t n) {
  if (n == UINT64_MAX) return std::nullopt;
  std::uint64_t start = n + 1;
  for (; start < s.threshold(); ++start) {
    if (s.member(start)) return start;
  }
  for (std::uint64_t o = 0; o < s.period(); ++o) {
    if (s.residue_bit(start + o)) return start + o;
  }
  return std::nullopt;
}

}  // namespace ultra
