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

#include <doctest.h>

#include "oracles.hpp"
#include "ultra/error.hpp"
#include "ultra/upset.hpp"

using namespace ultra;
using namespace ultra::testing;

namespace {

const UPSet kEvens = UPSet::residue_class(2, {0});
const UPSet kOdds = UPSet::residue_class(2, {1});
const UPSet kMult3 = UPSet::residue_class(3, {0});
const UPSet kMult6 = UPSet::residue_class(6, {0});

bool agree_below(const UPSet& s, std::uint64_t n,
                 const std::function<bool(std::uint64_t)>& member) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (s.member(i) != member(i)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("upset") {

TEST_CASE("membership") {
  CHECK(kEvens.member(4));
  CHECK_FALSE(kEvens.member(7));
  CHECK(UPSet::finite({1, 2, 3}).member(3));
  CHECK_FALSE(UPSet::finite({1, 2, 3}).member(4));
  CHECK(UPSet::at_least(5).member(1000000));
  CHECK_FALSE(UPSet::empty().member(0));
}

TEST_CASE("complement") {
  CHECK(complement(kEvens) == kOdds);
  CHECK(complement(UPSet::naturals()) == UPSet::empty());
  CHECK(agree_below(complement(kMult3), 200,
                    [](auto n) { return n % 3 == 1 || n % 3 == 2; }));
}

TEST_CASE("intersection and union") {
  const UPSet six = intersect(kEvens, kMult3);
  CHECK(agree_below(six, 200, [](auto n) { return n % 6 == 0; }));
  CHECK(six == kMult6);
  CHECK(intersect(kMult3, UPSet::naturals()) == kMult3);
  CHECK(unite(kEvens, kOdds) == UPSet::naturals());
  CHECK(difference(UPSet::naturals(), kEvens) == kOdds);
}

TEST_CASE("canonical forms collapse equal sets") {
  const UPSet as4 = UPSet::from_parts({}, 0, 4, {0, 2});
  CHECK(equals(kEvens, as4));
  CHECK(as4 == kEvens);
  CHECK(as4.period() == 2);
  const UPSet late = UPSet::from_parts({0, 2, 4, 6}, 8, 2, {0});
  CHECK(late.threshold() == 0);
  CHECK(late == kEvens);
  // 8 is a multiple of 4 outside the set, so the threshold stops at 9.
  const UPSet mixed = UPSet::from_parts({1, 3}, 10, 4, {0, 3});
  CHECK(mixed.threshold() == 9);
  CHECK(mixed.exceptions() == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("inclusion and finiteness") {
  CHECK(subset(kMult6, kEvens));
  CHECK_FALSE(subset(kEvens, kMult6));
  CHECK_FALSE(is_infinite(UPSet::finite({1, 2, 3})));
  CHECK(UPSet::finite({1, 2, 3}).cardinality() == 3u);
  CHECK(is_infinite(kOdds));
  CHECK_FALSE(kOdds.cardinality().has_value());
  for (std::uint64_t n = 0; n < 200; ++n) {
    if (kMult6.member(n)) CHECK(kEvens.member(n));
  }
}

TEST_CASE("element access") {
  CHECK(kth_element(kEvens, 3) == 6);
  CHECK(least_above(kEvens, 3) == 4u);
  CHECK_FALSE(least_above(UPSet::empty(), 10).has_value());
  CHECK_THROWS_AS(kth_element(UPSet::finite({1, 2}), 2), Error);
  const UPSet mixed = UPSet::from_parts({1, 3}, 10, 4, {0, 3});
  std::vector<std::uint64_t> scan;
  for (std::uint64_t n = 0; scan.size() < 30; ++n) {
    if (mixed.member(n)) scan.push_back(n);
  }
  for (std::uint64_t k = 0; k < scan.size(); ++k) {
    CHECK(kth_element(mixed, k) == scan[k]);
  }
}

TEST_CASE("invalid input and caps") {
  CHECK_THROWS_AS(UPSet::from_parts({}, 0, 0, {}), Error);
  CHECK_THROWS_AS(UPSet::from_parts({5}, 3, 1, {}), Error);
  CHECK_THROWS_AS(UPSet::from_parts({}, 0, 2, {2}), Error);
  try {
    const UPSet a = UPSet::residue_class(999983, {0});
    const UPSet b = UPSet::residue_class(999979, {0});
    (void)intersect(a, b);
    FAIL("expected PeriodOverflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPeriodOverflow);
  }
}

TEST_CASE("random operations match the bit oracle") {
  Rng rng(11);
  constexpr std::uint64_t kN = 300;
  for (int trial = 0; trial < 300; ++trial) {
    const RawSet ra = random_raw(rng, 12, 20), rb = random_raw(rng, 12, 20);
    const UPSet a = ra.build(), b = rb.build();
    for (std::uint64_t n = 0; n < kN; ++n) {
      REQUIRE(a.member(n) == ra.member(n));
      REQUIRE(complement(a).member(n) == !ra.member(n));
      REQUIRE(intersect(a, b).member(n) == (ra.member(n) && rb.member(n)));
      REQUIRE(unite(a, b).member(n) == (ra.member(n) || rb.member(n)));
    }
    const RawSet rc = inflate(ra, uniform(rng, 0, 9), uniform(rng, 1, 4));
    REQUIRE(rc.build() == a);
  }
}

}  // TEST_SUITE
