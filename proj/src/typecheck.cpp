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

#include "ultra/typecheck.hpp"

#include <optional>

#include "ultra/error.hpp"

namespace ultra {
namespace {

FinType check(const TermPtr& t, TypeContext& ctx) {
  return std::visit(
      [&](const auto& x) -> FinType {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          auto it = ctx.find(x.name);
          if (it == ctx.end()) {
            throw Error(ErrorKind::kTypeError,
                        "unbound variable '" + x.name + "'");
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, Num>) {
          return FinType::base();
        } else if constexpr (std::is_same_v<T, Const>) {
          return constant_type(x.constant);
        } else if constexpr (std::is_same_v<T, Lam>) {
          std::optional<FinType> shadowed;
          if (auto it = ctx.find(x.param); it != ctx.end()) {
            shadowed = it->second;
          }
          ctx[x.param] = x.param_type;
          FinType body = check(x.body, ctx);
          if (shadowed) {
            ctx[x.param] = *shadowed;
          } else {
            ctx.erase(x.param);
          }
          return FinType::arrow(body, x.param_type);
        } else if constexpr (std::is_same_v<T, App>) {
          FinType fn = check(x.fn, ctx);
          FinType arg = check(x.arg, ctx);
          if (fn.is_base()) {
            throw Error(ErrorKind::kTypeError,
                        "cannot apply " + print_term(x.fn) +
                            " of type 0 to an argument");
          }
          if (!(fn.arg() == arg)) {
            throw Error(ErrorKind::kTypeError,
                        "argument " + print_term(x.arg) + " of " +
                            print_term(x.fn) + ": expected type " +
                            fn.arg().to_string() + ", actual " +
                            arg.to_string());
          }
          return fn.result();
        } else {
          FinType fn = check(x.fn, ctx);
          if (!(fn == FinType::one())) {
            throw Error(ErrorKind::kTypeError,
                        "certified term: expected type 0(0), actual " +
                            fn.to_string());
          }
          if (x.period == 0) {
            throw Error(ErrorKind::kTypeError,
                        "certificate period must be at least 1");
          }
          return fn;
        }
      },
      t->node);
}

}  // namespace

FinType typecheck(const TermPtr& t, const TypeContext& ctx) {
  TypeContext scratch = ctx;
  return check(t, scratch);
}

TypeContext base_context(const TermPtr& t) {
  TypeContext ctx;
  for (const auto& name : free_variables(t)) ctx[name] = FinType::base();
  return ctx;
}

}  // namespace ultra
