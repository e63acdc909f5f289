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

#include <algorithm>
#include <utility>
#include <vector>

#include "ultra/error.hpp"
#include "ultra/term.hpp"

namespace ultra {

FinType FinType::arrow(const FinType& result, const FinType& arg) {
  FinType t;
  t.result_ = std::make_shared<const FinType>(result);
  t.arg_ = std::make_shared<const FinType>(arg);
  return t;
}

unsigned FinType::degree() const {
  if (is_base()) return 0;
  return std::max(result().degree(), arg().degree() + 1);
}

std::string FinType::to_string() const {
  if (is_base()) return "0";
  return result().to_string() + "(" + arg().to_string() + ")";
}

bool operator==(const FinType& a, const FinType& b) {
  if (a.is_base() || b.is_base()) return a.is_base() == b.is_base();
  return a.result() == b.result() && a.arg() == b.arg();
}

std::string_view constant_name(Constant c) {
  switch (c) {
    case Constant::kSucc: return "S";
    case Constant::kRec: return "rec";
    case Constant::kU: return "U";
    case Constant::kK: return "K";
    case Constant::kMu: return "mu";
    case Constant::kAdd: return "add";
    case Constant::kSub: return "sub";
    case Constant::kMul: return "mul";
    case Constant::kMod: return "mod";
    case Constant::kMin: return "min";
    case Constant::kMax: return "max";
    case Constant::kEq: return "eq";
    case Constant::kLt: return "lt";
    case Constant::kLe: return "le";
    case Constant::kAnd: return "and";
    case Constant::kOr: return "or";
    case Constant::kNot: return "not";
    case Constant::kIf: return "if";
  }
  return "?";
}

unsigned constant_arity(Constant c) {
  switch (c) {
    case Constant::kSucc:
    case Constant::kU:
    case Constant::kMu:
    case Constant::kNot:
      return 1;
    case Constant::kRec:
    case Constant::kIf:
      return 3;
    default:
      return 2;
  }
}

FinType constant_type(Constant c) {
  const FinType o = FinType::base();
  const FinType one = FinType::one();
  switch (c) {
    case Constant::kSucc:
    case Constant::kNot:
      return one;
    case Constant::kU:
    case Constant::kMu:
      return FinType::two();
    case Constant::kK:
      // K n X: 0(1)(0)
      return FinType::arrow(FinType::two(), o);
    case Constant::kRec: {
      // rec x y z with z : 0(0)(0), i.e. z r i.
      const FinType step = FinType::arrow(one, o);
      return FinType::arrow(FinType::arrow(FinType::arrow(o, step), o), o);
    }
    case Constant::kIf:
      return FinType::arrow(FinType::arrow(one, o), o);
    default:
      return FinType::arrow(one, o);
  }
}

TermPtr make_var(std::string name) {
  return std::make_shared<const Term>(Term{Var{std::move(name)}});
}
TermPtr make_num(std::uint64_t value) {
  return std::make_shared<const Term>(Term{Num{value}});
}
TermPtr make_const(Constant c) {
  return std::make_shared<const Term>(Term{Const{c}});
}
TermPtr make_lam(std::string param, FinType type, TermPtr body) {
  return std::make_shared<const Term>(
      Term{Lam{std::move(param), std::move(type), std::move(body)}});
}
TermPtr make_app(TermPtr fn, TermPtr arg) {
  return std::make_shared<const Term>(Term{App{std::move(fn), std::move(arg)}});
}
TermPtr make_app(TermPtr fn, std::initializer_list<TermPtr> args) {
  for (const auto& a : args) fn = make_app(std::move(fn), a);
  return fn;
}
TermPtr make_cert(std::uint64_t threshold, std::uint64_t period, TermPtr fn) {
  return std::make_shared<const Term>(
      Term{Cert{threshold, period, std::move(fn)}});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Num>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Const>) {
          return x.constant == y.constant;
        } else if constexpr (std::is_same_v<T, Lam>) {
          return x.param == y.param && x.param_type == y.param_type &&
                 term_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, App>) {
          return term_equal(x.fn, y.fn) && term_equal(x.arg, y.arg);
        } else {
          return x.threshold == y.threshold && x.period == y.period &&
                 term_equal(x.fn, y.fn);
        }
      },
      a->node);
}

namespace {

class Printer {
 public:
  explicit Printer(bool canonical_names) : canonical_(canonical_names) {}

  std::string print(const TermPtr& t) {
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Var>) {
            return lookup(x.name);
          } else if constexpr (std::is_same_v<T, Num>) {
            return std::to_string(x.value);
          } else if constexpr (std::is_same_v<T, Const>) {
            return std::string(constant_name(x.constant));
          } else if constexpr (std::is_same_v<T, Lam>) {
            return "(" + naked(t) + ")";
          } else if constexpr (std::is_same_v<T, App>) {
            return "(" + spine(t) + ")";
          } else {
            return "(cert " + std::to_string(x.threshold) + " " +
                   std::to_string(x.period) + " " + print(x.fn) + ")";
          }
        },
        t->node);
  }

 private:
  // A lambda or application without its enclosing parentheses.
  std::string naked(const TermPtr& t) {
    if (const auto* lam = std::get_if<Lam>(&t->node)) {
      std::string name = lam->param;
      if (canonical_) name = "#" + std::to_string(scope_.size());
      std::string head =
          "lam " + name + ":" + lam->param_type.to_string() + ". ";
      scope_.emplace_back(lam->param, name);
      std::string body = naked(lam->body);
      scope_.pop_back();
      return head + body;
    }
    if (std::holds_alternative<App>(t->node)) return spine(t);
    return print(t);
  }

  std::string spine(const TermPtr& t) {
    std::vector<TermPtr> parts;
    TermPtr cur = t;
    while (const auto* app = std::get_if<App>(&cur->node)) {
      parts.push_back(app->arg);
      cur = app->fn;
    }
    parts.push_back(cur);
    std::reverse(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ' ';
      out += print(parts[i]);
    }
    return out;
  }

  std::string lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return name;
  }

  bool canonical_;
  std::vector<std::pair<std::string, std::string>> scope_;
};

void collect_free(const TermPtr& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          if (std::find(bound.begin(), bound.end(), x.name) == bound.end()) {
            out.insert(x.name);
          }
        } else if constexpr (std::is_same_v<T, Lam>) {
          bound.push_back(x.param);
          collect_free(x.body, bound, out);
          bound.pop_back();
        } else if constexpr (std::is_same_v<T, App>) {
          collect_free(x.fn, bound, out);
          collect_free(x.arg, bound, out);
        } else if constexpr (std::is_same_v<T, Cert>) {
          collect_free(x.fn, bound, out);
        }
      },
      t->node);
}

}  // namespace

std::string print_term(const TermPtr& t) { return Printer(false).print(t); }

std::string alpha_key(const TermPtr& t) { return Printer(true).print(t); }

std::set<std::string> free_variables(const TermPtr& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

}  // namespace ultra
