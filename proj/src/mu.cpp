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

#include "ultra/mu.hpp"

#include "ultra/error.hpp"

namespace ultra {

SearchableFn indicator_fn(const UPSet& zeros) {
  return {[zeros](std::uint64_t x) -> std::uint64_t {
            return zeros.member(x) ? 0 : 1;
          },
          zeros};
}

std::optional<std::uint64_t> mu_search(const SearchableFn& f,
                                       std::uint64_t bound) {
  for (std::uint64_t x = 0; x < bound; ++x) {
    if (f(x) == 0) return x;
  }
  return std::nullopt;
}

void check_certificate(const SearchableFn& f) {
  if (!f.zero_set_certificate) {
    throw Error(ErrorKind::kInvalidArgument,
                "function carries no zero-set certificate");
  }
  const UPSet& cert = *f.zero_set_certificate;
  const std::uint64_t limit = cert.threshold() + 2 * cert.period();
  for (std::uint64_t x = 0; x < limit; ++x) {
    const bool zero = f(x) == 0;
    if (zero != cert.member(x)) {
      throw Error(ErrorKind::kCertificateMismatch,
                  "certificate " + cert.to_string() + " disagrees at " +
                      std::to_string(x) + ": f(x) " +
                      (zero ? "= 0" : "!= 0"));
    }
  }
}

UPSet cofinal_witness_set(const UPSet& zeros) {
  if (zeros.is_empty()) return UPSet::empty();
  return UPSet::at_least(kth_element(zeros, 0) + 1);
}

MuResult mu_via_filter(const SearchableFn& f, const PartialFilter& filter,
                       const FilterOptions& options) {
  check_certificate(f);
  const UPSet& zeros = *f.zero_set_certificate;
  UPSet witness_set = cofinal_witness_set(zeros);
  PartialFilter extended = extend_with_missing(filter, {witness_set}, options);
  MuResult out{std::nullopt, witness_set, extended};
  if (extended.contains(witness_set)) {
    // A zero exists below threshold + period whenever the zero set is
    // nonempty.
    out.value = mu_search(f, zeros.threshold() + zeros.period());
    if (!out.value) {
      throw Error(ErrorKind::kCertificateMismatch,
                  "filter asserts a zero but none was found below the "
                  "certificate bound");
    }
  }
  return out;
}

std::uint64_t k_prime(std::uint64_t n, const UPSet& x) {
  return least_above(x, n).value_or(0);
}

}  // namespace ultra
