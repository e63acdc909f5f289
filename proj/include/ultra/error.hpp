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

#ifndef ULTRA_ERROR_HPP_
#define ULTRA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultra {

enum class ErrorKind {
  kInvalidArgument,
  kPeriodOverflow,
  kNotEnoughElements,
  kGeneratorCap,
  kNotInAlgebra,
  kNotAPartition,
  kCertificateMismatch,
  kParseError,
  kTypeError,
  kFuelExhausted,
  kOracleUnavailable,
  kNonUPArgument,
  kArithmeticOverflow,
};

std::string_view error_kind_name(ErrorKind kind);

// All domain failures in the library are reported with this exception type.
// The CLI maps it to exit status 2 and a structured error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ultra

#endif  // ULTRA_ERROR_HPP_
