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

#include "ultra/error.hpp"

namespace ultra {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kPeriodOverflow: return "PeriodOverflow";
    case ErrorKind::kNotEnoughElements: return "NotEnoughElements";
    case ErrorKind::kGeneratorCap: return "GeneratorCap";
    case ErrorKind::kNotInAlgebra: return "NotInAlgebra";
    case ErrorKind::kNotAPartition: return "NotAPartition";
    case ErrorKind::kCertificateMismatch: return "CertificateMismatch";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kTypeError: return "TypeError";
    case ErrorKind::kFuelExhausted: return "FuelExhausted";
    case ErrorKind::kOracleUnavailable: return "OracleUnavailable";
    case ErrorKind::kNonUPArgument: return "NonUPArgument";
    case ErrorKind::kArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

}  // namespace ultra
