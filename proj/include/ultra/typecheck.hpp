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

#ifndef ULTRA_TYPECHECK_HPP_
#define ULTRA_TYPECHECK_HPP_

#include <map>
#include <string>

#include "ultra/term.hpp"

namespace ultra {

using TypeContext = std::map<std::string, FinType>;

// Type of t with free variables typed by ctx. Throws TypeError on an
// ill-typed application, a mistyped certificate, or an unbound variable.
FinType typecheck(const TermPtr& t, const TypeContext& ctx = {});

// Context giving every free variable of t the base type 0.
TypeContext base_context(const TermPtr& t);

}  // namespace ultra

#endif  // ULTRA_TYPECHECK_HPP_
