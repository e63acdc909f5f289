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

#include "ultra/eval.hpp"

#include <utility>

#include "ultra/error.hpp"
#include "ultra/setexpr.hpp"

namespace ultra {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) {
    throw Error(ErrorKind::kArithmeticOverflow, "addition overflows");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw Error(ErrorKind::kArithmeticOverflow, "multiplication overflows");
  }
  return a * b;
}

std::uint64_t arithmetic(Constant c, std::uint64_t a, std::uint64_t b) {
  switch (c) {
    case Constant::kAdd: return checked_add(a, b);
    case Constant::kSub: return a > b ? a - b : 0;
    case Constant::kMul: return checked_mul(a, b);
    case Constant::kMod: return b == 0 ? a : a % b;
    case Constant::kMin: return std::min(a, b);
    case Constant::kMax: return std::max(a, b);
    case Constant::kEq: return a == b ? 0 : 1;
    case Constant::kLt: return a < b ? 0 : 1;
    case Constant::kLe: return a <= b ? 0 : 1;
    case Constant::kAnd: return a == 0 && b == 0 ? 0 : 1;
    case Constant::kOr: return a == 0 || b == 0 ? 0 : 1;
    default:
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(constant_name(c)) + " is not binary arithmetic");
  }
}

[[noreturn]] void unavailable(const char* which) {
  throw Error(ErrorKind::kOracleUnavailable,
              std::string("no oracle for ") + which);
}

FunctionPtr make_function(Function f) {
  return std::make_shared<const Function>(std::move(f));
}

}  // namespace

Env Env::bind(std::string name, Value value) const {
  Env out;
  out.head_ = std::make_shared<const Node>(
      Node{std::move(name), std::move(value), head_});
  return out;
}

const Value* Env::lookup(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->next.get()) {
    if (n->name == name) return &n->value;
  }
  return nullptr;
}

bool is_numeral(const Value& v) {
  return std::holds_alternative<std::uint64_t>(v);
}

std::uint64_t as_numeral(const Value& v) {
  if (!is_numeral(v)) {
    throw Error(ErrorKind::kTypeError, "expected a numeral, got a function");
  }
  return std::get<std::uint64_t>(v);
}

Env env_from_inputs(const std::map<std::string, std::uint64_t>& inputs) {
  Env env;
  for (const auto& [name, value] : inputs) env = env.bind(name, value);
  return env;
}

Oracles filter_oracles(const PartialFilter& f, std::uint64_t mu_bound) {
  Oracles o;
  o.u = [f](const UPSet& s) -> std::uint64_t {
    if (!f.algebra().contains_set(s)) {
      throw Error(ErrorKind::kOracleUnavailable,
                  "filter cannot decide " + s.to_string() +
                      ": not in its algebra");
    }
    return f.contains(s) ? 0 : 1;
  };
  o.k = [](std::uint64_t n, const UPSet& x) { return k_prime(n, x); };
  o.mu = [mu_bound](const SearchableFn& fn) -> std::uint64_t {
    return mu_search(fn, mu_bound).value_or(0);
  };
  return o;
}

Evaluator::Evaluator(Oracles oracles, EvalOptions options)
    : oracles_(std::move(oracles)), options_(options) {}

void Evaluator::tick() {
  if (++steps_ > options_.fuel) {
    throw Error(ErrorKind::kFuelExhausted,
                "evaluation exceeded " + std::to_string(options_.fuel) +
                    " steps");
  }
}

Value Evaluator::eval(const TermPtr& t, const Env& env) {
  tick();
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          const Value* v = env.lookup(x.name);
          if (!v) {
            throw Error(ErrorKind::kInvalidArgument,
                        "unbound variable '" + x.name + "'");
          }
          return *v;
        } else if constexpr (std::is_same_v<T, Num>) {
          return x.value;
        } else if constexpr (std::is_same_v<T, Const>) {
          return make_function({Partial{x.constant, {}}});
        } else if constexpr (std::is_same_v<T, Lam>) {
          return make_function({Closure{t, env}});
        } else if constexpr (std::is_same_v<T, App>) {
          Value fn = eval(x.fn, env);
          Value arg = eval(x.arg, env);
          return apply(fn, arg);
        } else {
          return make_function(
              {Certified{x.threshold, x.period, eval(x.fn, env)}});
        }
      },
      t->node);
}

Value Evaluator::apply(const Value& fn, const Value& arg) {
  tick();
  if (is_numeral(fn)) {
    throw Error(ErrorKind::kTypeError, "cannot apply a numeral");
  }
  const Function& f = *std::get<FunctionPtr>(fn);
  if (const auto* c = std::get_if<Closure>(&f.fn)) {
    const auto& lam = std::get<Lam>(c->lam->node);
    return eval(lam.body, c->env.bind(lam.param, arg));
  }
  if (const auto* cert = std::get_if<Certified>(&f.fn)) {
    return apply(cert->fn, arg);
  }
  const auto& partial = std::get<Partial>(f.fn);
  std::vector<Value> args = partial.args;
  args.push_back(arg);
  if (args.size() < constant_arity(partial.constant)) {
    return make_function({Partial{partial.constant, std::move(args)}});
  }
  return saturate(partial.constant, args);
}

std::uint64_t Evaluator::apply_numeral(const Value& fn, std::uint64_t x) {
  return as_numeral(apply(fn, x));
}

Value Evaluator::saturate(Constant c, const std::vector<Value>& args) {
  switch (c) {
    case Constant::kSucc:
      return checked_add(as_numeral(args[0]), 1);
    case Constant::kNot:
      return as_numeral(args[0]) == 0 ? Value(std::uint64_t{1}) : Value(std::uint64_t{0});
    case Constant::kIf:
      return as_numeral(args[0]) == 0 ? args[1] : args[2];
    case Constant::kRec: {
      // rec 0 y z = y, rec (x+1) y z = z (rec x y z) x
      const std::uint64_t x = as_numeral(args[0]);
      Value acc = as_numeral(args[1]);
      for (std::uint64_t i = 0; i < x; ++i) {
        acc = as_numeral(apply(apply(args[2], acc), i));
      }
      return acc;
    }
    case Constant::kU:
      return call_u(args[0]);
    case Constant::kK: {
      if (!oracles_.k) unavailable("K");
      const std::uint64_t n = as_numeral(args[0]);
      return oracles_.k(n, set_of(args[1]));
    }
    case Constant::kMu: {
      if (!oracles_.mu) unavailable("mu");
      return oracles_.mu(searchable(args[0]));
    }
    default:
      return arithmetic(c, as_numeral(args[0]), as_numeral(args[1]));
  }
}

std::uint64_t Evaluator::call_u(const Value& fn) {
  if (!oracles_.u) unavailable("U");
  return oracles_.u(set_of(fn));
}

UPSet Evaluator::set_of(const Value& fn) {
  if (is_numeral(fn)) {
    throw Error(ErrorKind::kTypeError, "set argument is a numeral");
  }
  const Function& f = *std::get<FunctionPtr>(fn);
  if (const auto* cert = std::get_if<Certified>(&f.fn)) {
    return certified_set(*this, cert->fn, cert->threshold, cert->period);
  }
  return analyze_set(*this, fn);
}

SearchableFn Evaluator::searchable(const Value& fn) {
  SearchableFn out;
  out.evaluator = [this, fn](std::uint64_t x) { return apply_numeral(fn, x); };
  const Function& f = *std::get<FunctionPtr>(fn);
  if (std::holds_alternative<Certified>(f.fn)) out.zero_set_certificate = set_of(fn);
  return out;
}

std::uint64_t evaluate(const TermPtr& t, const Oracles& oracles,
                       const std::map<std::string, std::uint64_t>& inputs,
                       const std::vector<std::uint64_t>& args,
                       EvalOptions options) {
  Evaluator ev(oracles, options);
  Value v = ev.eval(t, env_from_inputs(inputs));
  for (auto a : args) v = ev.apply(v, a);
  return as_numeral(v);
}

}  // namespace ultra
