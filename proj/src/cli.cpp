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

#include "ultra/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ultra/algebra.hpp"
#include "ultra/config.hpp"
#include "ultra/eliminate.hpp"
#include "ultra/error.hpp"
#include "ultra/eval.hpp"
#include "ultra/io.hpp"
#include "ultra/mu.hpp"
#include "ultra/pfilter.hpp"
#include "ultra/setexpr.hpp"
#include "ultra/term.hpp"
#include "ultra/typecheck.hpp"
#include "ultra/ultralimit.hpp"
#include "ultra/upset.hpp"

namespace ultra::cli {
namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

UPSet load_set(const std::string& path) {
  return upset_from_json(read_json_file(path));
}

std::vector<UPSet> load_sets(const std::vector<std::string>& paths) {
  std::vector<UPSet> out;
  for (const auto& p : paths) out.push_back(load_set(p));
  return out;
}

// "x=3,y=4" or repeated "x=3" items.
Inputs parse_inputs(const std::vector<std::string>& items) {
  Inputs out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos || eq == 0) {
        bad_input("input '" + part + "' is not of the form name=value");
      }
      const std::string value = part.substr(eq + 1);
      if (value.empty() ||
          !std::all_of(value.begin(), value.end(), ::isdigit)) {
        bad_input("input '" + part + "' does not assign a numeral");
      }
      try {
        out[part.substr(0, eq)] = std::stoull(value);
      } catch (const std::out_of_range&) {
        bad_input("input '" + part + "' is out of range");
      }
    }
  }
  return out;
}

struct Options {
  std::string config_path;
  std::string tiebreak;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> fuel;

  Config resolve() const {
    Config c;
    if (!config_path.empty()) c = config_from_json(read_json_file(config_path));
    if (!tiebreak.empty()) c.tiebreak = parse_tiebreak(tiebreak);
    if (seed) c.seed = *seed;
    if (fuel) c.fuel = *fuel;
    c.validate();
    return c;
  }
};

using Action = std::function<Json(const Config&)>;

class Commands {
 public:
  Commands(CLI::App& app, Options& opts) : app_(app), opts_(opts) {
    add_upset();
    add_algebra();
    add_filter();
    add_mu();
    add_ultralimit();
    add_term();
    add_eliminate();
  }

  // The action of the innermost parsed subcommand.
  const Action* selected() const {
    for (const auto& [cmd, action] : actions_) {
      if (cmd->parsed()) return &action;
    }
    return nullptr;
  }

 private:
  CLI::App* leaf(CLI::App* parent, const std::string& name,
                 const std::string& help, Action action) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    actions_.emplace_back(cmd, std::move(action));
    return cmd;
  }

  CLI::App* group(const std::string& name, const std::string& help) {
    CLI::App* g = app_.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  }

  void add_upset() {
    CLI::App* g = group("upset", "ultimately periodic set calculator");
    auto unary = [&](const std::string& name, const std::string& help,
                     std::function<UPSet(const UPSet&)> op) {
      CLI::App* c = leaf(g, name, help, [this, op](const Config&) {
        return to_json(op(load_set(a_)));
      });
      c->add_option("set", a_, "set file")->required();
    };
    auto binary = [&](const std::string& name, const std::string& help,
                      std::function<Json(const UPSet&, const UPSet&)> op) {
      CLI::App* c = leaf(g, name, help, [this, op](const Config&) {
        return op(load_set(a_), load_set(b_));
      });
      c->add_option("a", a_, "set file")->required();
      c->add_option("b", b_, "set file")->required();
    };
    auto with_number = [&](const std::string& name, const std::string& help,
                           std::function<Json(const UPSet&, std::uint64_t)> op) {
      CLI::App* c = leaf(g, name, help, [this, op](const Config&) {
        return op(load_set(a_), n_);
      });
      c->add_option("set", a_, "set file")->required();
      c->add_option("n", n_, "natural number")->required();
    };

    with_number("member", "membership of n", [](const UPSet& s, auto n) {
      return Json{{"member", s.member(n)}};
    });
    unary("complement", "complement in N",
          [](const UPSet& s) { return complement(s); });
    binary("intersect", "intersection", [](const UPSet& x, const UPSet& y) {
      return to_json(intersect(x, y));
    });
    binary("union", "union", [](const UPSet& x, const UPSet& y) {
      return to_json(unite(x, y));
    });
    binary("equals", "set equality", [](const UPSet& x, const UPSet& y) {
      return Json{{"equal", equals(x, y)}};
    });
    binary("subset", "inclusion a <= b", [](const UPSet& x, const UPSet& y) {
      return Json{{"subset", subset(x, y)}};
    });
    with_number("kth", "k-th element, counting from 0",
                [](const UPSet& s, auto k) {
                  return Json{{"element", kth_element(s, k)}};
                });
    with_number("above", "least element above n", [](const UPSet& s, auto n) {
      auto v = least_above(s, n);
      return Json{{"element", v ? Json(*v) : Json(nullptr)}};
    });
  }

  void add_algebra() {
    CLI::App* g = group("algebra", "finitely generated set algebras");
    CLI::App* span_cmd =
        leaf(g, "span", "algebra generated by sets", [this](const Config& c) {
          return to_json(Algebra::span(load_sets(files_), c.generator_cap));
        });
    span_cmd->add_option("sets", files_, "generator files");

    CLI::App* atoms =
        leaf(g, "atoms", "nonempty atoms", [this](const Config& c) {
          return to_json(algebra_from_json(read_json_file(a_), c.generator_cap))
              .at("atoms");
        });
    atoms->add_option("algebra", a_, "algebra file")->required();

    CLI::App* verify =
        leaf(g, "verify", "check the atom partition", [this](const Config& c) {
          Algebra a = algebra_from_json(read_json_file(a_), c.generator_cap);
          return to_json(verify_partition(a, bound_));
        });
    verify->add_option("algebra", a_, "algebra file")->required();
    verify->add_option("--bound", bound_, "pointwise check on [0, bound)")
        ->capture_default_str();
  }

  PartialFilter load_filter(const Config& c) const {
    return filter_from_json(read_json_file(a_), c.generator_cap);
  }

  void add_filter() {
    CLI::App* g = group("filter", "partial non-principal ultrafilters");
    leaf(g, "new", "trivial filter",
         [](const Config&) { return to_json(trivial_filter()); });

    CLI::App* ext =
        leaf(g, "extend", "extend by generators", [this](const Config& c) {
          return to_json(
              extend(load_filter(c), load_sets(files_), c.filter_options()));
        });
    ext->add_option("filter", a_, "filter file")->required();
    ext->add_option("sets", files_, "new generator files")->required();

    CLI::App* verify =
        leaf(g, "verify", "check the filter axioms", [this](const Config& c) {
          return to_json(verify_axioms(load_filter(c), c.seed));
        });
    verify->add_option("filter", a_, "filter file")->required();

    CLI::App* select = leaf(
        g, "select", "choose the part of a partition in the filter",
        [this](const Config& c) {
          Selection s = select_from_partition(load_filter(c),
                                              load_sets(files_),
                                              c.filter_options());
          return Json{{"index", s.index}, {"filter", to_json(s.filter)}};
        });
    select->add_option("filter", a_, "filter file")->required();
    select->add_option("parts", files_, "part files")->required();

    CLI::App* index =
        leaf(g, "index", "indices of enumerated sets in the filter",
             [this](const Config& c) {
               IndexFilter r = index_filter(load_filter(c), load_sets(files_));
               return Json{{"indices", r.indices}, {"report", to_json(r.report)}};
             });
    index->add_option("filter", a_, "filter file")->required();
    index->add_option("--enum", files_, "enumerated set files")->required();
  }

  void add_mu() {
    CLI::App* g = group("mu", "least zeros of functions with known zero sets");
    CLI::App* search =
        leaf(g, "search", "bounded least-zero search", [this](const Config&) {
          auto v = mu_search(indicator_fn(load_set(a_)), n_);
          return Json{{"value", v ? Json(*v) : Json(nullptr)}};
        });
    search->add_option("--f", a_, "zero set of the function")->required();
    search->add_option("--bound", n_, "search below this bound")->required();

    CLI::App* via = leaf(
        g, "via-filter", "least zero decided by the filter",
        [this](const Config& c) {
          PartialFilter f = b_.empty() ? trivial_filter() : filter_from_json(
              read_json_file(b_), c.generator_cap);
          return to_json(
              mu_via_filter(indicator_fn(load_set(a_)), f, c.filter_options()));
        });
    via->add_option("--zeros", a_, "zero set of the function")->required();
    via->add_option("--filter", b_, "starting filter (default trivial)");

    CLI::App* kp =
        leaf(g, "kprime", "least element above n, 0 if none",
             [this](const Config&) {
               return Json{{"value", k_prime(n_, load_set(a_))}};
             });
    kp->add_option("set", a_, "set file")->required();
    kp->add_option("n", n_, "natural number")->required();
  }

  void add_ultralimit() {
    CLI::App* c = app_.add_subcommand("ultralimit", "dyadic ultralimit");
    actions_.emplace_back(c, [this](const Config& cfg) {
      UPSeq seq = sequence_from_json(read_json_file(a_));
      PartialFilter f = b_.empty() ? trivial_filter() : filter_from_json(
          read_json_file(b_), cfg.generator_cap);
      return to_json(ultralimit(seq, precision_, f, cfg.ultralimit_options()),
                     cfg);
    });
    c->add_option("--seq", a_, "sequence file")->required();
    c->add_option("--precision", precision_, "number of dyadic levels")
        ->required();
    c->add_option("--filter", b_, "starting filter (default trivial)");
  }

  void add_term() {
    CLI::App* g = group("term", "term language tools");
    CLI::App* check =
        leaf(g, "check", "parse and typecheck", [this](const Config&) {
          TermPtr t = parse_term(read_text(a_));
          FinType ty = typecheck(t, base_context(t));
          return Json{{"term", print_term(t)},
                      {"type", ty.to_string()},
                      {"degree", ty.degree()}};
        });
    check->add_option("term", a_, "term file")->required();

    CLI::App* eval =
        leaf(g, "eval", "evaluate to a numeral", [this](const Config& c) {
          TermPtr t = parse_term(read_text(a_));
          const Inputs inputs = parse_inputs(inputs_);
          TypeContext ctx;
          for (const auto& [name, v] : inputs) ctx[name] = FinType::base();
          typecheck(t, ctx);
          PartialFilter f = b_.empty() ? trivial_filter() : filter_from_json(
              read_json_file(b_), c.generator_cap);
          Oracles o = filter_oracles(f, c.mu_bound);
          if (b_.empty()) o.u = nullptr;
          return Json{{"value", evaluate(t, o, inputs, args_, c.eval_options())}};
        });
    eval->add_option("term", a_, "term file")->required();
    eval->add_option("--oracle", b_, "filter answering U");
    eval->add_option("--inputs", inputs_, "free variable values, x=1,y=2");
    eval->add_option("--args", args_, "numeral arguments")->delimiter(',');

    CLI::App* sites =
        leaf(g, "sites", "U sites, inner first", [this](const Config&) {
          TermPtr t = parse_term(read_text(a_));
          typecheck(t, base_context(t));
          Json out = Json::array();
          for (const auto& s : collect_usites(t)) out.push_back(print_term(s.arg));
          return Json{{"sites", out}};
        });
    sites->add_option("term", a_, "term file")->required();
  }

  void add_eliminate() {
    CLI::App* c = app_.add_subcommand("eliminate", "replace U by a partial filter");
    actions_.emplace_back(c, [this](const Config& cfg) {
      TermPtr t = parse_term(read_text(a_));
      EliminateResult r =
          eliminate(t, parse_inputs(inputs_), cfg.eliminate_options());
      Json trace = to_json(r, cfg);
      Json check = to_json(verify_trace(r.trace, cfg.filter_options()));
      trace["uqf"] = check;
      if (b_.empty()) return trace;
      std::ofstream file(b_);
      if (!file) bad_input("cannot write '" + b_ + "'");
      file << trace.dump(2) << "\n";
      return Json{{"value", r.value}, {"uqf", check}, {"trace", b_}};
    });
    c->add_option("--term", a_, "term file")->required();
    c->add_option("--inputs", inputs_, "free variable values, x=1,y=2");
    c->add_option("--trace", b_, "write the trace here");
  }

  CLI::App& app_;
  Options& opts_;
  std::vector<std::pair<CLI::App*, Action>> actions_;

  std::string a_, b_;
  std::vector<std::string> files_, inputs_;
  std::vector<std::uint64_t> args_;
  std::uint64_t n_ = 0;
  std::uint64_t bound_ = 256;
  unsigned precision_ = 0;
};

void report_error(std::ostream& err, const std::string& kind,
                  const std::string& message) {
  err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Ultimately periodic sets, partial ultrafilters and U elimination",
               "ultra");
  app.fallthrough();
  app.require_subcommand(1);
  Options opts;
  app.add_option("--config", opts.config_path, "JSON config file");
  app.add_option("--tiebreak", opts.tiebreak, "bit-0 or complement-first");
  app.add_option("--seed", opts.seed, "seed for sampled verification");
  app.add_option("--fuel", opts.fuel, "evaluation step budget");
  Commands commands(app, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Action* action = commands.selected();
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    const Config config = opts.resolve();
    out << (*action)(config).dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    report_error(err, std::string(error_kind_name(e.kind())), e.what());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
  }
  return kExitDomain;
}

}  // namespace ultra::cli
