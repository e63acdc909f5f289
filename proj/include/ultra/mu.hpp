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

#ifndef ULTRA_MU_HPP_
#define ULTRA_MU_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "ultra/pfilter.hpp"
#include "ultra/upset.hpp"

namespace ultra {

// A total function on the naturals, optionally with a claimed zero set.
struct SearchableFn {
  std::function<std::uint64_t(std::uint64_t)> evaluator;
  std::optional<UPSet> zero_set_certificate;

  std::uint64_t operator()(std::uint64_t x) const { return evaluator(x); }
};

// Evaluator that is 0 exactly on `zeros`, with `zeros` as its certificate.
SearchableFn indicator_fn(const UPSet& zeros);

// Least x < bound with f(x) = 0.
std::optional<std::uint64_t> mu_search(const SearchableFn& f,
                                       std::uint64_t bound);

// Samples f on [0, threshold + 2 * period) of the certificate. Throws
// CertificateMismatch on the first disagreement and InvalidArgument when
// there is no certificate.
void check_certificate(const SearchableFn& f);

// {x : some x' < x has f(x') = 0}, built from the zero set.
UPSet cofinal_witness_set(const UPSet& zeros);

struct MuResult {
  std::optional<std::uint64_t> value;
  UPSet witness_set;  // X_f
  PartialFilter filter;
};

// Decides whether f has a zero by asking the (extended) filter whether X_f
// belongs to it, then finds the least zero by a search that is bounded by
// the certificate.
MuResult mu_via_filter(const SearchableFn& f, const PartialFilter& filter,
                       const FilterOptions& options = {});

// Least element of x strictly above n, 0 when there is none.
std::uint64_t k_prime(std::uint64_t n, const UPSet& x);

}  // namespace ultra

#endif  // ULTRA_MU_HPP_
