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

#ifndef ULTRA_IO_HPP_
#define ULTRA_IO_HPP_

#include <string>

#include <json.hpp>

#include "ultra/algebra.hpp"
#include "ultra/config.hpp"
#include "ultra/eliminate.hpp"
#include "ultra/mu.hpp"
#include "ultra/pfilter.hpp"
#include "ultra/report.hpp"
#include "ultra/ultralimit.hpp"
#include "ultra/upset.hpp"

namespace ultra {

using Json = nlohmann::ordered_json;

// Readers throw InvalidArgument on malformed documents.

// {"exceptions": [...], "threshold": t, "period": p, "residues": [...]}
Json to_json(const UPSet& s);
UPSet upset_from_json(const Json& j);

// {"generators": [...], "atoms": [{"word": w, "set": s}, ...]}; only the
// generators are read back.
Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, std::size_t generator_cap);

// {"generators": [...], "branch": w, "core": s}; the core is recomputed on
// reading.
Json to_json(const PartialFilter& f);
PartialFilter filter_from_json(const Json& j, std::size_t generator_cap);

// {"prefix": [...], "cycle": [...]} with values written as "p/q" strings;
// integers and decimal numbers are accepted on input.
Json to_json(const UPSeq& seq);
UPSeq sequence_from_json(const Json& j);

Json to_json(const Config& c);
// Missing keys keep their defaults.
Config config_from_json(const Json& j, Config base = {});

Json to_json(const Report& r);
Json to_json(const UltralimitResult& r, const Config& c);
Json to_json(const MuResult& r);
Json to_json(const EliminateResult& r, const Config& c);

Json read_json_file(const std::string& path);

}  // namespace ultra

#endif  // ULTRA_IO_HPP_
