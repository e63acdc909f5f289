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

#ifndef ULTRA_EVAL_HPP_
#define ULTRA_EVAL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ultra/mu.hpp"
#include "ultra/pfilter.hpp"
#include "ultra/term.hpp"
#include "ultra/upset.hpp"

namespace ultra {

inline constexpr std::uint64_t kDefaultFuel = 10'000'000;
inline constexpr std::uint64_t kDefaultMuBound = 10'000;

struct Function;
using FunctionPtr = std::shared_ptr<const Function>;
// A runtime value: a numeral or a function.
using Value = std::variant<std::uint64_t, FunctionPtr>;

class Env {
 public:
  Env() = default;
  Env bind(std::string name, Value value) const;
  const Value* lookup(const std::string& name) const;

 private:
  struct Node {
    std::string name;
    Value value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
};

struct Closure {
  TermPtr lam;  // holds a Lam node
  Env env;
};
// A constant applied to fewer arguments than its arity.
struct Partial {
  Constant constant;
  std::vector<Value> args;
};
struct Certified {
  std::uint64_t threshold;
  std::uint64_t period;
  Value fn;
};
struct Function {
  std::variant<Closure, Partial, Certified> fn;
};

// The interpretations of U, K and mu. U answers 0 for "in the filter" and 1
// otherwise. An unset member raises OracleUnavailable when used.
struct Oracles {
  std::function<std::uint64_t(const UPSet&)> u;
  std::function<std::uint64_t(std::uint64_t, const UPSet&)> k;
  std::function<std::uint64_t(const SearchableFn&)> mu;
};

// U from the filter's membership, K from k_prime, mu from a search below
// mu_bound (0 when nothing is found).
Oracles filter_oracles(const PartialFilter& f,
                       std::uint64_t mu_bound = kDefaultMuBound);

struct EvalOptions {
  std::uint64_t fuel = kDefaultFuel;
};

// Call-by-value, environment-based evaluator. Every node visit and every
// application consumes one unit of fuel.
class Evaluator {
 public:
  explicit Evaluator(Oracles oracles, EvalOptions options = {});

  Value eval(const TermPtr& t, const Env& env);
  Value apply(const Value& fn, const Value& arg);
  std::uint64_t apply_numeral(const Value& fn, std::uint64_t x);

  // The set {n : fn(n) = 0}, after normalizing fn to min(fn(n), 1). Uses the
  // set-expression analysis, or the certificate for certified functions.
  UPSet set_of(const Value& fn);
  SearchableFn searchable(const Value& fn);

  const Oracles& oracles() const { return oracles_; }
  std::uint64_t steps() const { return steps_; }
  void tick();

 private:
  Value saturate(Constant c, const std::vector<Value>& args);
  std::uint64_t call_u(const Value& fn);

  Oracles oracles_;
  EvalOptions options_;
  std::uint64_t steps_ = 0;
};

std::uint64_t as_numeral(const Value& v);
bool is_numeral(const Value& v);

Env env_from_inputs(const std::map<std::string, std::uint64_t>& inputs);

// Evaluates t under the inputs, applies it to args and returns the
// resulting numeral.
std::uint64_t evaluate(const TermPtr& t, const Oracles& oracles,
                       const std::map<std::string, std::uint64_t>& inputs = {},
                       const std::vector<std::uint64_t>& args = {},
                       EvalOptions options = {});

}  // namespace ultra

#endif  // ULTRA_EVAL_HPP_
