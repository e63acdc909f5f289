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

#include "ultra/eliminate.hpp"

#include <algorithm>
#include <set>

#include "ultra/error.hpp"
#include "ultra/mu.hpp"
#include "ultra/setexpr.hpp"
#include "ultra/typecheck.hpp"

namespace ultra {
namespace {

Oracles recording(const PartialFilter& f, std::uint64_t mu_bound,
                  FilterTrace* trace) {
  Oracles base = filter_oracles(f, mu_bound);
  Oracles o = base;
  o.u = [u = base.u, trace](const UPSet& s) {
    trace->u_queries.push_back(s);
    return u(s);
  };
  o.k = [k = base.k, trace](std::uint64_t n, const UPSet& s) {
    trace->k_queries.emplace_back(n, s);
    return k(n, s);
  };
  return o;
}

bool finite_or_cofinite(const UPSet& s) {
  return !s.is_infinite() || !complement(s).is_infinite();
}

}  // namespace

EliminateResult eliminate(const TermPtr& t, const Inputs& inputs,
                          const EliminateOptions& options) {
  TypeContext ctx;
  for (const auto& [name, value] : inputs) ctx[name] = FinType::base();
  if (!typecheck(t, ctx).is_base()) {
    throw Error(ErrorKind::kTypeError,
                "eliminate expects a term of type 0 after the inputs");
  }
  const std::vector<USite> sites = collect_usites(t);

  EliminateResult out;
  PartialFilter f = trivial_filter();
  for (const auto& site : sites) {
    Stage stage;
    stage.site = print_term(site.arg);
    stage.set = to_upset(site.arg, filter_oracles(f, options.mu_bound),
                         inputs, options.eval);
    stage.generators_before = f.algebra().generator_count();
    stage.atoms_before = f.algebra().atoms().size();
    f = extend_with_missing(f, {stage.set}, options.filter);
    stage.generators_after = f.algebra().generator_count();
    stage.atoms_after = f.algebra().atoms().size();
    stage.branch = f.branch();
    stage.core = f.core();
    stage.member = f.contains(stage.set);
    stage.forced = finite_or_cofinite(stage.set);
    out.trace.stages.push_back(std::move(stage));
  }

  out.trace.filter = f;
  Evaluator ev(recording(f, options.mu_bound, &out.trace), options.eval);
  out.value = as_numeral(ev.eval(t, env_from_inputs(inputs)));
  return out;
}

std::uint64_t evaluate_with_filter(const TermPtr& t, const Inputs& inputs,
                                   const PartialFilter& f,
                                   const EliminateOptions& options) {
  return evaluate(t, filter_oracles(f, options.mu_bound), inputs, {},
                  options.eval);
}

Report verify_uqf(const PartialFilter& f0, const UPSet& x, const UPSet& y,
                  std::uint64_t n, const FilterOptions& options) {
  // With a finite core the extension is skipped and membership is core
  // inclusion.
  PartialFilter f = f0;
  try {
    f = extend_with_missing(f0, {x, y}, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInvalidArgument) throw;
  }
  auto in_f = [&f](const UPSet& s) { return subset(f.core(), s); };
  const bool in_x = in_f(x);
  const bool in_y = in_f(y);
  const bool in_xy = in_f(intersect(x, y));
  const bool in_cx = in_f(complement(x));

  Report report;
  auto& dichotomy = report.add("complement-dichotomy");
  if (in_x == in_cx) {
    fail_once(dichotomy, in_x ? "X and its complement are both in F"
                              : "neither X nor its complement is in F");
  }
  auto& upward = report.add("intersection-upward");
  if (in_xy && !(in_x && in_y)) {
    fail_once(upward, "X & Y is in F but X or Y is not");
  }
  auto& closure = report.add("intersection-closure");
  if (in_x && in_y && !in_xy) {
    fail_once(closure, "X and Y are in F but X & Y is not");
  }
  auto& witness = report.add("witness");
  if (in_x) {
    const std::uint64_t k = k_prime(n, x);
    if (k <= n || !x.member(k)) {
      fail_once(witness, "K(" + std::to_string(n) + ", X) = " +
                             std::to_string(k) +
                             " is not an element of X above n");
    }
  }
  // Sets are compared as UPSets, so characteristic functions with the same
  // zero set cannot be told apart here; the term evaluator normalizes them.
  report.add("characteristic-normalization").detail = "structural";
  return report;
}

std::vector<UqfInstance> traced_instances(const FilterTrace& trace) {
  std::vector<UPSet> sets;
  auto add_set = [&](const UPSet& s) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) {
      sets.push_back(s);
    }
  };
  for (const auto& s : trace.u_queries) add_set(s);
  std::set<std::uint64_t> ns{0};
  for (const auto& [n, s] : trace.k_queries) {
    add_set(s);
    ns.insert(n);
  }
  if (sets.empty()) add_set(UPSet::naturals());

  std::vector<UqfInstance> out;
  for (const auto& x : sets) {
    for (const auto& y : sets) {
      for (auto n : ns) out.push_back({x, y, n});
    }
  }
  return out;
}

Report verify_trace(const FilterTrace& trace, const FilterOptions& options) {
  Report total;
  for (const auto& inst : traced_instances(trace)) {
    Report r = verify_uqf(trace.filter, inst.x, inst.y, inst.n, options);
    for (std::size_t i = 0; i < r.clauses.size(); ++i) {
      if (total.clauses.size() <= i) total.add(r.clauses[i].name);
      if (!r.clauses[i].passed) {
        fail_once(total.clauses[i],
                  "X = " + inst.x.to_string() + ", Y = " + inst.y.to_string() +
                      ", n = " + std::to_string(inst.n) + ": " +
                      r.clauses[i].detail);
      }
    }
  }
  return total;
}

}  // namespace ultra
