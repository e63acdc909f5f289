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

#ifndef ULTRA_TERM_HPP_
#define ULTRA_TERM_HPP_

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace ultra {

// Finite types: 0, and tau(rho) for functions from rho to tau.
class FinType {
 public:
  FinType() = default;  // the base type 0

  static FinType base() { return FinType(); }
  static FinType arrow(const FinType& result, const FinType& arg);
  static FinType one() { return arrow(base(), base()); }
  static FinType two() { return arrow(base(), one()); }

  bool is_base() const { return !result_; }
  const FinType& result() const { return *result_; }
  const FinType& arg() const { return *arg_; }

  // deg(0) = 0, deg(tau(rho)) = max(deg tau, deg rho + 1).
  unsigned degree() const;
  std::string to_string() const;

  friend bool operator==(const FinType& a, const FinType& b);

 private:
  std::shared_ptr<const FinType> result_;
  std::shared_ptr<const FinType> arg_;
};

enum class Constant {
  kSucc,  // S
  kRec,   // R0 x y z
  kU,
  kK,
  kMu,
  kAdd,
  kSub,  // truncated
  kMul,
  kMod,  // x mod 0 = x
  kMin,
  kMax,
  kEq,  // comparisons and connectives answer 0 for true, 1 for false
  kLt,
  kLe,
  kAnd,
  kOr,
  kNot,
  kIf,  // if c a b = a when c = 0, else b
};

std::string_view constant_name(Constant c);
// Number of arguments the constant consumes before producing a numeral.
unsigned constant_arity(Constant c);
FinType constant_type(Constant c);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::string name;
};
struct Num {
  std::uint64_t value;
};
struct Const {
  Constant constant;
};
struct Lam {
  std::string param;
  FinType param_type;
  TermPtr body;
};
struct App {
  TermPtr fn;
  TermPtr arg;
};
// A type-1 term claimed to have an ultimately periodic zero set with the
// given threshold and period.
struct Cert {
  std::uint64_t threshold;
  std::uint64_t period;
  TermPtr fn;
};

struct Term {
  std::variant<Var, Num, Const, Lam, App, Cert> node;
};

TermPtr make_var(std::string name);
TermPtr make_num(std::uint64_t value);
TermPtr make_const(Constant c);
TermPtr make_lam(std::string param, FinType type, TermPtr body);
TermPtr make_app(TermPtr fn, TermPtr arg);
TermPtr make_app(TermPtr fn, std::initializer_list<TermPtr> args);
TermPtr make_cert(std::uint64_t threshold, std::uint64_t period, TermPtr fn);

// Structural equality (bound variable names included).
bool term_equal(const TermPtr& a, const TermPtr& b);

// Canonical s-expression text; parse(print_term(t)) is structurally equal
// to t.
std::string print_term(const TermPtr& t);
// Like print_term but with bound variables renamed by binding depth, so
// alpha-equivalent terms print identically.
std::string alpha_key(const TermPtr& t);

std::set<std::string> free_variables(const TermPtr& t);

TermPtr parse_term(std::string_view text);
FinType parse_type(std::string_view text);

}  // namespace ultra

#endif  // ULTRA_TERM_HPP_
