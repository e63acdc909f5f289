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

#include "ultra/setexpr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <variant>

#include "ultra/error.hpp"

namespace ultra {
namespace {

using i128 = __int128;

[[noreturn]] void non_up(const std::string& what) {
  throw Error(ErrorKind::kNonUPArgument, what);
}

// A function of j that, from `threshold` on, grows by step[j mod period]
// every `period` steps: f(j + period) = f(j) + step[j mod period].
struct Ql {
  std::uint64_t threshold = 0;
  std::uint64_t period = 1;
  std::vector<std::uint64_t> step{0};
  std::function<std::uint64_t(std::uint64_t)> value;
};

Ql ql_const(std::uint64_t v) {
  return {0, 1, {0}, [v](std::uint64_t) { return v; }};
}

Ql ql_var() { return {0, 1, {1}, [](std::uint64_t j) { return j; }}; }

std::uint64_t first_at(std::uint64_t threshold, std::uint64_t period,
                       std::uint64_t r) {
  return threshold + (r + period - threshold % period) % period;
}

std::uint64_t narrow(i128 v, const char* what) {
  if (v < 0 || v > static_cast<i128>(UINT64_MAX)) {
    throw Error(ErrorKind::kArithmeticOverflow, what);
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t step_in(const Ql& q, std::uint64_t period, std::uint64_t r) {
  return narrow(static_cast<i128>(q.step[r % q.period]) * (period / q.period),
                "set expression grows too fast");
}

i128 ceil_div(i128 num, i128 den) { return (num + den - 1) / den; }

std::uint64_t raise_threshold(std::uint64_t current, std::uint64_t j0,
                              i128 periods, std::uint64_t period) {
  const i128 t = static_cast<i128>(j0) + periods * period;
  if (t > static_cast<i128>(kThresholdCap)) {
    throw Error(ErrorKind::kPeriodOverflow,
                "set expression stabilizes only beyond the threshold cap");
  }
  return std::max(current, static_cast<std::uint64_t>(t));
}

// Per residue class, starting values a0, b0 and per-period growth da, db
// determine after how many periods the combination stabilizes and how fast
// it then grows.
struct ClassRule {
  i128 periods;
  std::uint64_t step;
};
using Rule = std::function<ClassRule(i128 a0, i128 da, i128 b0, i128 db)>;

Ql binary(const Ql& a, const Ql& b, const Rule& rule,
          std::function<std::uint64_t(std::uint64_t, std::uint64_t)> op) {
  Ql out;
  out.period = checked_lcm(a.period, b.period);
  const std::uint64_t base = std::max(a.threshold, b.threshold);
  out.threshold = base;
  out.step.assign(out.period, 0);
  for (std::uint64_t r = 0; r < out.period; ++r) {
    const std::uint64_t j0 = first_at(base, out.period, r);
    const ClassRule cr = rule(a.value(j0), step_in(a, out.period, r),
                              b.value(j0), step_in(b, out.period, r));
    out.step[r] = cr.step;
    out.threshold = raise_threshold(out.threshold, j0, cr.periods, out.period);
  }
  out.value = [fa = a.value, fb = b.value, op](std::uint64_t j) {
    return op(fa(j), fb(j));
  };
  return out;
}

// Periods until an increasing difference (slope s > 0) becomes >= 0, or a
// decreasing one (s < 0) becomes <= 0.
i128 until_nonnegative(i128 diff0, i128 s) {
  return diff0 >= 0 ? 0 : ceil_div(-diff0, s);
}
i128 until_nonpositive(i128 diff0, i128 s) {
  return diff0 <= 0 ? 0 : ceil_div(diff0, -s);
}
// Periods until the difference is strictly positive (s > 0) or strictly
// negative (s < 0).
i128 until_positive(i128 diff0, i128 s) {
  return diff0 > 0 ? 0 : -diff0 / s + 1;
}
i128 until_negative(i128 diff0, i128 s) {
  return diff0 < 0 ? 0 : diff0 / -s + 1;
}

Ql ql_add(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128, i128 da, i128, i128 db) {
        return ClassRule{0, narrow(da + db, "set expression overflows")};
      },
      [](std::uint64_t x, std::uint64_t y) {
        if (x > UINT64_MAX - y) {
          throw Error(ErrorKind::kArithmeticOverflow, "addition overflows");
        }
        return x + y;
      });
}

Ql ql_sub(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128 a0, i128 da, i128 b0, i128 db) -> ClassRule {
        const i128 s = da - db, d0 = a0 - b0;
        if (s > 0) return {until_nonnegative(d0, s), narrow(s, "sub")};
        if (s < 0) return {until_nonpositive(d0, s), 0};
        return {0, 0};
      },
      [](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
        return x > y ? x - y : 0;
      });
}

Ql ql_min(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128 a0, i128 da, i128 b0, i128 db) -> ClassRule {
        const i128 s = da - db, d0 = a0 - b0;
        if (s > 0) return {until_nonnegative(d0, s), narrow(db, "min")};
        if (s < 0) return {until_nonpositive(d0, s), narrow(da, "min")};
        return {0, narrow(da, "min")};
      },
      [](std::uint64_t x, std::uint64_t y) { return std::min(x, y); });
}

Ql ql_max(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128 a0, i128 da, i128 b0, i128 db) -> ClassRule {
        const i128 s = da - db, d0 = a0 - b0;
        if (s > 0) return {until_nonnegative(d0, s), narrow(da, "max")};
        if (s < 0) return {until_nonpositive(d0, s), narrow(db, "max")};
        return {0, narrow(da, "max")};
      },
      [](std::uint64_t x, std::uint64_t y) { return std::max(x, y); });
}

Ql ql_eq(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128 a0, i128 da, i128 b0, i128 db) -> ClassRule {
        const i128 s = da - db, d0 = a0 - b0;
        if (s > 0) return {until_positive(d0, s), 0};
        if (s < 0) return {until_negative(d0, s), 0};
        return {0, 0};
      },
      [](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
        return x == y ? 0 : 1;
      });
}

Ql ql_lt(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128 a0, i128 da, i128 b0, i128 db) -> ClassRule {
        const i128 s = da - db, d0 = a0 - b0;
        if (s > 0) return {until_nonnegative(d0, s), 0};
        if (s < 0) return {until_negative(d0, s), 0};
        return {0, 0};
      },
      [](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
        return x < y ? 0 : 1;
      });
}

Ql ql_le(const Ql& a, const Ql& b) {
  return binary(
      a, b,
      [](i128 a0, i128 da, i128 b0, i128 db) -> ClassRule {
        const i128 s = da - db, d0 = a0 - b0;
        if (s > 0) return {until_positive(d0, s), 0};
        if (s < 0) return {until_nonpositive(d0, s), 0};
        return {0, 0};
      },
      [](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
        return x <= y ? 0 : 1;
      });
}

Ql ql_sg(const Ql& a) { return ql_min(a, ql_const(1)); }

Ql ql_mul(const Ql& a, std::uint64_t k) {
  Ql out = a;
  for (auto& s : out.step) {
    s = narrow(static_cast<i128>(s) * k, "set expression overflows");
  }
  out.value = [fa = a.value, k](std::uint64_t j) {
    const std::uint64_t x = fa(j);
    if (k != 0 && x > UINT64_MAX / k) {
      throw Error(ErrorKind::kArithmeticOverflow, "multiplication overflows");
    }
    return x * k;
  };
  return out;
}

Ql ql_mod(const Ql& a, std::uint64_t m) {
  if (m == 0) return a;
  // In class r the values advance by step[r] per period, so modulo m they
  // repeat after m / gcd(step[r], m) periods.
  std::uint64_t repeat = 1;
  for (auto s : a.step) repeat = checked_lcm(repeat, m / std::gcd(s % m, m));
  Ql out;
  out.threshold = a.threshold;
  out.period = checked_lcm(a.period, a.period * repeat);
  out.step.assign(out.period, 0);
  out.value = [fa = a.value, m](std::uint64_t j) { return fa(j) % m; };
  return out;
}

Ql ql_if(const Ql& c, const Ql& x, const Ql& y) {
  const Ql cond = ql_sg(c);
  Ql out;
  out.period = checked_lcm(checked_lcm(cond.period, x.period), y.period);
  out.threshold = std::max({cond.threshold, x.threshold, y.threshold});
  out.step.assign(out.period, 0);
  for (std::uint64_t r = 0; r < out.period; ++r) {
    const std::uint64_t j0 = first_at(out.threshold, out.period, r);
    out.step[r] = cond.value(j0) == 0 ? step_in(x, out.period, r)
                                      : step_in(y, out.period, r);
  }
  out.value = [fc = c.value, fx = x.value, fy = y.value](std::uint64_t j) {
    return fc(j) == 0 ? fx(j) : fy(j);
  };
  return out;
}

UPSet zero_set(const Ql& q) {
  const Ql z = ql_eq(q, ql_const(0));
  std::vector<bool> prefix(z.threshold);
  for (std::uint64_t j = 0; j < z.threshold; ++j) prefix[j] = q.value(j) == 0;
  std::vector<bool> residues(z.period);
  for (std::uint64_t r = 0; r < z.period; ++r) {
    residues[r] = q.value(first_at(z.threshold, z.period, r)) == 0;
  }
  return UPSet::from_bits(std::move(prefix), std::move(residues));
}

// ---------------------------------------------------------------------------
// Symbolic evaluation: subterms free of the symbolic variables evaluate to
// ordinary values, the rest to Ql descriptions.

using SymEnv = std::map<std::string, Ql>;

struct SymFun {
  TermPtr lam;
  Env env;
  SymEnv sym;
};
using SymArg = std::variant<Value, Ql>;
struct SymPartial {
  Constant constant;
  std::vector<SymArg> args;
};
using SymVal = std::variant<Value, Ql, SymFun, SymPartial>;

class Analyzer {
 public:
  explicit Analyzer(Evaluator& ev) : ev_(ev) {}

  SymVal analyze(const TermPtr& t, const Env& env, const SymEnv& sym) {
    ev_.tick();
    const auto fv = free_variables(t);
    const bool symbolic = std::any_of(fv.begin(), fv.end(), [&](auto& v) {
      return sym.count(v) > 0;
    });
    if (!symbolic) return ev_.eval(t, env);
    return std::visit(
        [&](const auto& x) -> SymVal {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Var>) {
            return sym.at(x.name);
          } else if constexpr (std::is_same_v<T, Lam>) {
            return SymFun{t, env, sym};
          } else if constexpr (std::is_same_v<T, App>) {
            SymVal f = analyze(x.fn, env, sym);
            SymVal a = analyze(x.arg, env, sym);
            return apply(std::move(f), std::move(a), t);
          } else {
            non_up("certified function depends on the set variable: " +
                   print_term(t));
          }
        },
        t->node);
  }

  SymVal apply(SymVal f, SymVal a, const TermPtr& where) {
    if (auto* fv = std::get_if<Value>(&f)) {
      if (auto* av = std::get_if<Value>(&a)) return ev_.apply(*fv, *av);
      if (is_numeral(*fv)) non_up("numeral applied: " + print_term(where));
      const Function& fn = *std::get<FunctionPtr>(*fv);
      if (const auto* c = std::get_if<Closure>(&fn.fn)) {
        return enter(std::get<Lam>(c->lam->node), c->env, {}, std::move(a),
                     where);
      }
      if (const auto* p = std::get_if<Partial>(&fn.fn)) {
        SymPartial sp{p->constant, {}};
        for (const auto& v : p->args) sp.args.emplace_back(v);
        return push(std::move(sp), std::move(a), where);
      }
      non_up("certified function applied to the set variable: " +
             print_term(where));
    }
    if (auto* sf = std::get_if<SymFun>(&f)) {
      return enter(std::get<Lam>(sf->lam->node), sf->env, sf->sym,
                   std::move(a), where);
    }
    if (auto* sp = std::get_if<SymPartial>(&f)) {
      return push(std::move(*sp), std::move(a), where);
    }
    non_up("numeral applied: " + print_term(where));
  }

 private:
  SymVal enter(const Lam& lam, Env env, SymEnv sym, SymVal a,
               const TermPtr& where) {
    if (auto* v = std::get_if<Value>(&a)) {
      sym.erase(lam.param);
      env = env.bind(lam.param, *v);
    } else if (auto* q = std::get_if<Ql>(&a)) {
      sym[lam.param] = *q;
    } else {
      non_up("function argument depends on the set variable: " +
             print_term(where));
    }
    return analyze(lam.body, env, sym);
  }

  SymVal push(SymPartial sp, SymVal a, const TermPtr& where) {
    if (auto* v = std::get_if<Value>(&a)) {
      sp.args.emplace_back(*v);
    } else if (auto* q = std::get_if<Ql>(&a)) {
      sp.args.emplace_back(*q);
    } else {
      non_up("function argument depends on the set variable: " +
             print_term(where));
    }
    if (sp.args.size() < constant_arity(sp.constant)) return sp;
    return saturate(sp, where);
  }

  static bool constant_arg(const SymArg& a) {
    return std::holds_alternative<Value>(a);
  }

  static std::uint64_t numeral(const SymArg& a) {
    return as_numeral(std::get<Value>(a));
  }

  static Ql lift(const SymArg& a) {
    if (const auto* q = std::get_if<Ql>(&a)) return *q;
    return ql_const(numeral(a));
  }

  Ql saturate(const SymPartial& sp, const TermPtr& where) {
    const auto& args = sp.args;
    switch (sp.constant) {
      case Constant::kSucc: return ql_add(lift(args[0]), ql_const(1));
      case Constant::kAdd: return ql_add(lift(args[0]), lift(args[1]));
      case Constant::kSub: return ql_sub(lift(args[0]), lift(args[1]));
      case Constant::kMin: return ql_min(lift(args[0]), lift(args[1]));
      case Constant::kMax: return ql_max(lift(args[0]), lift(args[1]));
      case Constant::kEq: return ql_eq(lift(args[0]), lift(args[1]));
      case Constant::kLt: return ql_lt(lift(args[0]), lift(args[1]));
      case Constant::kLe: return ql_le(lift(args[0]), lift(args[1]));
      case Constant::kAnd:
        return ql_max(ql_sg(lift(args[0])), ql_sg(lift(args[1])));
      case Constant::kOr:
        return ql_min(ql_sg(lift(args[0])), ql_sg(lift(args[1])));
      case Constant::kNot: return ql_sub(ql_const(1), ql_sg(lift(args[0])));
      case Constant::kIf:
        return ql_if(lift(args[0]), lift(args[1]), lift(args[2]));
      case Constant::kMul:
        if (constant_arg(args[0])) return ql_mul(lift(args[1]), numeral(args[0]));
        if (constant_arg(args[1])) return ql_mul(lift(args[0]), numeral(args[1]));
        non_up("product of two terms depending on the set variable: " +
               print_term(where));
      case Constant::kMod:
        if (!constant_arg(args[1])) {
          non_up("modulus depends on the set variable: " + print_term(where));
        }
        return ql_mod(lift(args[0]), numeral(args[1]));
      default:
        non_up(std::string(constant_name(sp.constant)) +
               " applied to a term depending on the set variable: " +
               print_term(where));
    }
  }

  Evaluator& ev_;
};

// ---------------------------------------------------------------------------
// Static checks and site collection.

bool mentions(const TermPtr& t, const std::set<std::string>& vars) {
  for (const auto& v : free_variables(t)) {
    if (vars.count(v)) return true;
  }
  return false;
}

void spine_of(const TermPtr& t, TermPtr& head, std::vector<TermPtr>& args) {
  args.clear();
  TermPtr cur = t;
  while (const auto* app = std::get_if<App>(&cur->node)) {
    args.push_back(app->arg);
    cur = app->fn;
  }
  std::reverse(args.begin(), args.end());
  head = cur;
}

bool grammar_constant(Constant c) {
  switch (c) {
    case Constant::kRec:
    case Constant::kU:
    case Constant::kK:
    case Constant::kMu:
      return false;
    default:
      return true;
  }
}

void check_body(const TermPtr& t, std::set<std::string> dep) {
  if (!mentions(t, dep)) return;
  if (const auto* v = std::get_if<Var>(&t->node)) {
    if (dep.count(v->name)) return;
  }
  TermPtr head;
  std::vector<TermPtr> args;
  spine_of(t, head, args);
  if (args.empty()) non_up("not a set expression: " + print_term(t));
  if (const auto* c = std::get_if<Const>(&head->node)) {
    const Constant k = c->constant;
    if (!grammar_constant(k)) {
      non_up(std::string(constant_name(k)) +
             " applied to a term depending on the set variable: " +
             print_term(t));
    }
    if (args.size() != constant_arity(k)) {
      non_up("partially applied operation in a set expression: " +
             print_term(t));
    }
    if (k == Constant::kMul && mentions(args[0], dep) &&
        mentions(args[1], dep)) {
      non_up("product of two terms depending on the set variable: " +
             print_term(t));
    }
    if (k == Constant::kMod && mentions(args[1], dep)) {
      non_up("modulus depends on the set variable: " + print_term(t));
    }
    for (const auto& a : args) check_body(a, dep);
    return;
  }
  if (const auto* lam = std::get_if<Lam>(&head->node)) {
    if (args.size() == 1 && lam->param_type.is_base()) {
      check_body(args[0], dep);
      if (mentions(args[0], dep)) {
        dep.insert(lam->param);
      } else {
        dep.erase(lam->param);
      }
      check_body(lam->body, dep);
      return;
    }
  }
  non_up("not a set expression: " + print_term(t));
}

class SiteCollector {
 public:
  std::vector<USite> sites;

  void visit(const TermPtr& t) {
    if (const auto* c = std::get_if<Const>(&t->node)) {
      if (c->constant == Constant::kU || c->constant == Constant::kK) {
        non_up(std::string(constant_name(c->constant)) +
               " must be applied to a set expression");
      }
      return;
    }
    if (const auto* lam = std::get_if<Lam>(&t->node)) {
      bound_.push_back(lam->param);
      visit(lam->body);
      bound_.pop_back();
      return;
    }
    if (const auto* cert = std::get_if<Cert>(&t->node)) {
      visit(cert->fn);
      return;
    }
    if (!std::holds_alternative<App>(t->node)) return;

    TermPtr head;
    std::vector<TermPtr> args;
    spine_of(t, head, args);
    const auto* c = std::get_if<Const>(&head->node);
    if (c && c->constant == Constant::kU) {
      site(args[0], true);
      for (std::size_t i = 1; i < args.size(); ++i) visit(args[i]);
      return;
    }
    if (c && c->constant == Constant::kK) {
      if (args.size() < 2) non_up("K must be applied to a set expression");
      visit(args[0]);
      site(args[1], false);
      for (std::size_t i = 2; i < args.size(); ++i) visit(args[i]);
      return;
    }
    visit(head);
    for (const auto& a : args) visit(a);
  }

 private:
  void site(const TermPtr& arg, bool record) {
    visit(arg);
    check_set_expression(arg);
    for (const auto& v : free_variables(arg)) {
      if (std::find(bound_.begin(), bound_.end(), v) != bound_.end()) {
        non_up("set expression " + print_term(arg) +
               " depends on the bound variable '" + v + "'");
      }
    }
    if (!record) return;
    std::string key = alpha_key(arg);
    for (const auto& s : sites) {
      if (s.key == key) return;
    }
    sites.push_back({arg, std::move(key)});
  }

  std::vector<std::string> bound_;
};

}  // namespace

UPSet analyze_set(Evaluator& ev, const Value& fn) {
  Analyzer analyzer(ev);
  SymVal out = analyzer.apply(fn, ql_var(), make_var("j"));
  if (const auto* q = std::get_if<Ql>(&out)) return zero_set(*q);
  if (const auto* v = std::get_if<Value>(&out)) {
    return as_numeral(*v) == 0 ? UPSet::naturals() : UPSet::empty();
  }
  non_up("set expression does not produce a numeral");
}

UPSet certified_set(Evaluator& ev, const Value& fn, std::uint64_t threshold,
                    std::uint64_t period) {
  if (period == 0 || period > kPeriodCap || threshold > kThresholdCap) {
    throw Error(ErrorKind::kCertificateMismatch,
                "certificate (" + std::to_string(threshold) + ", " +
                    std::to_string(period) + ") is out of range");
  }
  const std::uint64_t limit = threshold + 2 * period;
  std::vector<bool> zero(limit);
  for (std::uint64_t j = 0; j < limit; ++j) {
    zero[j] = ev.apply_numeral(fn, j) == 0;
  }
  for (std::uint64_t j = threshold; j < threshold + period; ++j) {
    if (zero[j] != zero[j + period]) {
      throw Error(ErrorKind::kCertificateMismatch,
                  "certificate (" + std::to_string(threshold) + ", " +
                      std::to_string(period) + ") refuted at " +
                      std::to_string(j));
    }
  }
  std::vector<bool> prefix(zero.begin(), zero.begin() + threshold);
  std::vector<bool> residues(period);
  for (std::uint64_t r = 0; r < period; ++r) {
    residues[r] = zero[first_at(threshold, period, r)];
  }
  return UPSet::from_bits(std::move(prefix), std::move(residues));
}

UPSet to_upset(const TermPtr& set_expr, const Oracles& oracles,
               const std::map<std::string, std::uint64_t>& inputs,
               EvalOptions options) {
  Evaluator ev(oracles, options);
  return ev.set_of(ev.eval(set_expr, env_from_inputs(inputs)));
}

void check_set_expression(const TermPtr& arg) {
  if (std::holds_alternative<Cert>(arg->node)) return;
  const auto* lam = std::get_if<Lam>(&arg->node);
  if (!lam || !lam->param_type.is_base()) {
    non_up("set argument is not of the form lam j:0. e: " + print_term(arg));
  }
  check_body(lam->body, {lam->param});
}

std::vector<USite> collect_usites(const TermPtr& t) {
  SiteCollector collector;
  collector.visit(t);
  return std::move(collector.sites);
}

}  // namespace ultra
