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

// Acceptance suite: one PASS/FAIL line per criterion. Every check compares
// the library against an independent model (bit vectors, direct scans, a
// substitution interpreter) or against fixed expected files.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "oracles.hpp"
#include "ref_interp.hpp"
#include "term_gen.hpp"
#include "ultra/cli.hpp"
#include "ultra/eliminate.hpp"
#include "ultra/error.hpp"
#include "ultra/eval.hpp"
#include "ultra/mu.hpp"
#include "ultra/pfilter.hpp"
#include "ultra/setexpr.hpp"
#include "ultra/typecheck.hpp"
#include "ultra/ultralimit.hpp"

using namespace ultra;
using namespace ultra::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

UPSet from_bits_window(const Bits& bits, std::uint64_t threshold,
                       std::uint64_t period) {
  std::vector<bool> prefix(bits.begin(), bits.begin() + threshold);
  std::vector<bool> residues(period);
  for (std::uint64_t n = threshold; n < threshold + period; ++n) {
    residues[n % period] = bits[n];
  }
  return UPSet::from_bits(std::move(prefix), std::move(residues));
}

bool bits_infinite(const Bits& bits, std::uint64_t threshold) {
  return std::find(bits.begin() + threshold, bits.end(), true) != bits.end();
}

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

Bits bits_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

Bits bits_not(const Bits& a) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = !a[i];
  return out;
}

std::string str(const UPSet& s) { return s.to_string(); }

// ---------------------------------------------------------------------------
// 1. Set algebra against bit vectors.

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(1001);
  constexpr std::uint64_t kWindow = 256;
  std::vector<RawSet> raws;
  for (int i = 0; i < 500; ++i) raws.push_back(random_raw(rng, 24, 32));
  std::size_t ops = 0;
  for (std::size_t i = 0; i < raws.size(); ++i) {
    const RawSet& ra = raws[i];
    const RawSet& rb = raws[(i + 1) % raws.size()];
    const UPSet a = ra.build(), b = rb.build();
    const Bits ba = bits_of(ra, kWindow), bb = bits_of(rb, kWindow);
    const UPSet c = complement(a), n = intersect(a, b), u = unite(a, b),
                d = difference(a, b);
    for (std::uint64_t x = 0; x < kWindow; ++x) {
      o.require(a.member(x) == ba[x], "member " + str(a));
      o.require(c.member(x) == !ba[x], "complement " + str(a));
      o.require(n.member(x) == (ba[x] && bb[x]), "intersect " + str(a));
      o.require(u.member(x) == (ba[x] || bb[x]), "union " + str(a));
      o.require(d.member(x) == (ba[x] && !bb[x]), "difference " + str(a));
    }
    ops += 5;

    // Equality, inclusion and finiteness need a window past both thresholds
    // covering a common period.
    const std::uint64_t t = std::max(ra.threshold, rb.threshold);
    const std::uint64_t h = t + std::lcm(ra.period, rb.period);
    const Bits ha = bits_of(ra, h), hb = bits_of(rb, h);
    o.require(equals(a, b) == (ha == hb), "equals " + str(a) + " " + str(b));
    o.require(subset(a, b) == bits_subset(ha, hb), "subset " + str(a));
    o.require(subset(n, a), "intersection inside " + str(a));
    o.require(a.is_infinite() ==
                  bits_infinite(bits_of(ra, ra.threshold + ra.period),
                                ra.threshold),
              "infinite " + str(a));
    const RawSet same = inflate(ra, uniform(rng, 0, 10), uniform(rng, 1, 3));
    o.require(equals(same.build(), a) && same.build() == a,
              "canonical form " + str(a));
    ops += 5;

    std::vector<std::uint64_t> members;
    for (std::uint64_t x = 0; x < kWindow; ++x) {
      if (ba[x]) members.push_back(x);
    }
    for (std::size_t k = 0; k < members.size(); k += 7) {
      o.require(kth_element(a, k) == members[k], "kth " + str(a));
    }
    for (std::uint64_t x = 0; x + 1 < kWindow; x += 13) {
      auto it = std::upper_bound(members.begin(), members.end(), x);
      if (it != members.end()) {
        o.require(least_above(a, x) == *it, "least_above " + str(a));
      }
    }
    ops += 2;
  }
  const double secs = seconds_since(start);
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "500 sets, %zu operations on [0, 256), %.2f s",
                ops, secs);
  o.detail = buf;
  return o;
}

// ---------------------------------------------------------------------------
// 2 and 3. Staged filters checked on bit vectors; decided memberships
// recorded and re-checked at every later stage.

struct StagedRun {
  std::vector<RawSet> generators;
  std::vector<std::pair<UPSet, bool>> decided;
};

// Checks the filter clauses over atom unions computed from the raw
// generators alone.
void check_stage(Outcome& o, const PartialFilter& f,
                 const std::vector<RawSet>& gens, Rng& rng,
                 std::vector<std::pair<UPSet, bool>>& decided) {
  std::uint64_t t = 0, p = 1;
  for (const auto& g : gens) {
    t = std::max(t, g.threshold);
    p = std::lcm(p, g.period);
  }
  const std::uint64_t h = t + p;
  std::map<Word, Bits> atoms;
  for (std::uint64_t n = 0; n < h; ++n) {
    Word w;
    for (const auto& g : gens) w += g.member(n) ? '0' : '1';
    auto [it, fresh] = atoms.try_emplace(w, Bits(h, false));
    it->second[n] = true;
  }
  std::vector<Bits> atom_bits;
  for (auto& [w, b] : atoms) atom_bits.push_back(b);
  o.require(atom_bits.size() == f.algebra().atoms().size(),
            "atom count differs from the bit model");

  std::vector<Bits> unions;
  const std::size_t a = atom_bits.size();
  auto make_union = [&](const std::function<bool(std::size_t)>& pick) {
    Bits u(h, false);
    for (std::size_t i = 0; i < a; ++i) {
      if (!pick(i)) continue;
      for (std::uint64_t n = 0; n < h; ++n) u[n] = u[n] || atom_bits[i][n];
    }
    unions.push_back(std::move(u));
  };
  if (a <= 10) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a); ++mask) {
      make_union([&](std::size_t i) { return (mask >> i) & 1; });
    }
  } else {
    for (int s = 0; s < 1024; ++s) {
      const std::uint64_t mask = rng();
      make_union([&](std::size_t i) { return (mask >> (i % 64)) & 1; });
    }
  }

  std::vector<UPSet> sets;
  std::vector<bool> in;
  for (const auto& u : unions) {
    sets.push_back(from_bits_window(u, t, p));
    in.push_back(f.contains(sets.back()));
  }
  for (std::size_t i = 0; i < unions.size(); ++i) {
    const bool in_complement =
        f.contains(from_bits_window(bits_not(unions[i]), t, p));
    o.require(in[i] != in_complement, "complement dichotomy at " +
                                          str(sets[i]));
    o.require(!in[i] || bits_infinite(unions[i], t),
              "finite set in the filter: " + str(sets[i]));
    decided.emplace_back(sets[i], in[i]);
  }
  const std::size_t m = unions.size();
  const std::size_t pairs = std::min<std::size_t>(m * m, 1024);
  for (std::size_t s = 0; s < pairs; ++s) {
    const std::size_t i = m * m <= 1024 ? s / m : rng() % m;
    const std::size_t j = m * m <= 1024 ? s % m : rng() % m;
    const Bits both = bits_and(unions[i], unions[j]);
    const bool in_both = f.contains(from_bits_window(both, t, p));
    o.require(!in_both || (in[i] && in[j]), "intersection upward");
    o.require(!(in[i] && in[j]) || in_both, "intersection closure");
    if (bits_subset(unions[i], unions[j])) {
      o.require(!in[i] || in[j], "superset closure");
    }
  }

  // Characteristic functions differing off the zero set get one verdict.
  const Oracles oracles = filter_oracles(f);
  for (const auto& g : gens) {
    std::string prefix = "5", residue = "(S (mod j 4))";
    for (std::uint64_t n = 0; n < g.threshold; ++n) {
      if (g.member(n)) {
        prefix = "(if (eq j " + std::to_string(n) + ") 0 " + prefix + ")";
      }
    }
    for (auto r : g.residues) {
      residue = "(if (eq (mod j " + std::to_string(g.period) + ") " +
                std::to_string(r) + ") 0 " + residue + ")";
    }
    const std::string e = "(lam j:0. if (lt j " + std::to_string(g.threshold) +
                          ") " + prefix + " " + residue + ")";
    const auto v1 = evaluate(parse_term("U " + e), oracles);
    const auto v2 = evaluate(
        parse_term("U (lam n:0. min (" + e + " n) 1)"), oracles);
    o.require(v1 == v2, "normalization changes the verdict");
    o.require(v1 == (f.contains(g.build()) ? 0u : 1u),
              "U disagrees with the filter");
  }
}

struct StagedSummary {
  Outcome axioms;
  Outcome conservative;
  std::size_t stages = 0;
  std::size_t decided = 0;
  std::size_t rechecked = 0;
  double seconds = 0;
};

StagedSummary staged_runs() {
  StagedSummary out;
  const auto start = Clock::now();
  Rng rng(2002);
  for (int run = 0; run < 200; ++run) {
    const FilterOptions opts{
        run % 2 ? TieBreak::kComplementFirst : TieBreak::kGeneratorFirst, 16};
    const std::size_t total = uniform(rng, 1, 6);
    std::vector<RawSet> gens;
    std::vector<std::vector<std::pair<UPSet, bool>>> history;
    PartialFilter f = trivial_filter();
    while (gens.size() < total) {
      const std::size_t batch =
          std::min<std::size_t>(uniform(rng, 1, 3), total - gens.size());
      std::vector<UPSet> fresh;
      for (std::size_t i = 0; i < batch; ++i) {
        // Periods dividing 24 keep the common period of the bit model small.
        RawSet g;
        do {
          g = random_raw(rng, 24, 12, coin(rng, 15) ? 10 : 50);
        } while (24 % g.period != 0);
        gens.push_back(std::move(g));
        fresh.push_back(gens.back().build());
      }
      try {
        f = extend(f, fresh, opts);
      } catch (const Error& e) {
        out.axioms.require(false, std::string("extend failed: ") + e.what());
        break;
      }
      ++out.stages;
      const Report r = verify_axioms(f, run);
      out.axioms.require(r.passed(), "verify_axioms: " +
                                         (r.first_failure()
                                              ? r.first_failure()->detail
                                              : std::string()));
      // Earlier decisions must survive this extension.
      for (const auto& earlier : history) {
        for (const auto& [s, verdict] : earlier) {
          ++out.rechecked;
          out.conservative.require(f.contains(s) == verdict,
                                   "membership of " + str(s) + " changed");
        }
      }
      std::vector<std::pair<UPSet, bool>> decided;
      check_stage(out.axioms, f, gens, rng, decided);
      out.decided += decided.size();
      history.push_back(std::move(decided));
    }
  }
  out.seconds = seconds_since(start);
  return out;
}

// ---------------------------------------------------------------------------
// 4. Finite partitions.

Outcome criterion4() {
  Outcome o;
  Rng rng(4004);
  std::size_t total_parts = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 15;
    const std::uint64_t t = uniform(rng, 0, 20);
    const std::uint64_t p = uniform(rng, 1, 24);
    if (t + p < m) {
      --trial;
      continue;
    }
    // Slot labels for the prefix and the residues; the first m slots get
    // distinct labels so that no part is empty.
    std::vector<std::size_t> label(t + p);
    for (auto& l : label) l = rng() % m;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < m; ++i) label[(i * 7919) % (t + p)] = perm[i];
    std::vector<RawSet> raws(m);
    for (std::size_t i = 0; i < m; ++i) {
      raws[i].threshold = t;
      raws[i].period = p;
    }
    for (std::uint64_t n = 0; n < t; ++n) raws[label[n]].exceptions.push_back(n);
    for (std::uint64_t r = 0; r < p; ++r) raws[label[t + r]].residues.push_back(r);
    std::vector<UPSet> parts;
    for (const auto& r : raws) parts.push_back(r.build());
    // Skip partitions whose labels collided into an empty part.
    if (std::any_of(parts.begin(), parts.end(),
                    [](const UPSet& s) { return s.is_empty(); })) {
      --trial;
      continue;
    }
    total_parts += m;

    const FilterOptions opts{
        coin(rng) ? TieBreak::kGeneratorFirst : TieBreak::kComplementFirst,
        16};
    PartialFilter start = trivial_filter();
    const std::size_t room = 16 - (m - 1);
    std::vector<UPSet> pre;
    for (auto k = uniform(rng, 0, std::min<std::size_t>(room, 2)); k > 0; --k) {
      pre.push_back(random_raw(rng, 6, 6).build());
    }
    if (!pre.empty()) start = extend_with_missing(start, pre, opts);

    Selection s;
    try {
      s = select_from_partition(start, parts, opts);
    } catch (const Error& e) {
      o.require(false, std::string("select failed: ") + e.what());
      continue;
    }
    const std::uint64_t h = horizon({s.filter.core()}) + t + p;
    const Bits core = bits_of(s.filter.core(), h);
    std::size_t containing = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (bits_subset(core, bits_of(raws[i], h))) ++containing;
    }
    o.require(containing == 1, "core lies in " + std::to_string(containing) +
                                   " parts");
    o.require(s.index < m && bits_subset(core, bits_of(raws[s.index], h)),
              "selected part does not contain the core");
    o.require(s.filter.contains(parts[s.index]), "selected part not in filter");
    o.require(bits_infinite(bits_of(raws[s.index], t + p), t),
              "selected part is finite");
    for (const auto& g : pre) {
      o.require(s.filter.contains(g) == start.contains(g),
                "selection changed an earlier verdict");
    }
    o.require(verify_axioms(s.filter, trial).passed(),
              "extended filter fails the axioms");
  }
  o.detail = "200 partitions, " + std::to_string(total_parts) + " parts";
  return o;
}

// ---------------------------------------------------------------------------
// 5. mu through the filter.

Outcome criterion5() {
  Outcome o;
  Rng rng(5005);
  int empty_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    RawSet raw;
    if (trial % 5 == 0) {
      raw.period = uniform(rng, 1, 9);
      raw.threshold = uniform(rng, 0, 12);
      ++empty_cases;
    } else {
      do {
        raw = random_raw(rng, 9, 12, uniform(rng, 5, 40));
      } while (raw.build().is_empty());
    }
    const UPSet zeros = raw.build();
    const SearchableFn f{
        [raw](std::uint64_t x) -> std::uint64_t {
          return raw.member(x) ? 0 : 1 + x % 5;
        },
        zeros};
    std::optional<std::uint64_t> scan;
    for (std::uint64_t x = 0; x < raw.threshold + raw.period; ++x) {
      if (raw.member(x)) {
        scan = x;
        break;
      }
    }
    PartialFilter start = trivial_filter();
    if (coin(rng)) start = extend(start, {random_raw(rng, 5, 5).build()});
    const MuResult r = mu_via_filter(f, start);
    const auto searched = mu_search(f, raw.threshold + raw.period + 100);
    o.require(r.value == searched, "mu_via_filter and mu_search disagree");
    o.require(r.value == scan, "mu disagrees with a direct scan");
    if (!scan) {
      o.require(r.witness_set.is_empty(), "X_f not empty for empty zero set");
      o.require(!r.value, "value present for empty zero set");
    } else {
      for (std::uint64_t x = 0; x < 100; ++x) {
        o.require(r.witness_set.member(x) == (*scan < x), "X_f wrong");
      }
    }
    // The same function as a certified term queried through mu.
    const std::string term =
        "mu (cert " + std::to_string(raw.threshold) + " " +
        std::to_string(raw.period) + " (lam j:0. " +
        [&] {
          std::string e = "1";
          for (std::uint64_t n = 0; n < raw.threshold; ++n) {
            if (raw.member(n)) e = "(if (eq j " + std::to_string(n) + ") 0 " + e + ")";
          }
          std::string res = "1";
          for (auto q : raw.residues) {
            res = "(if (eq (mod j " + std::to_string(raw.period) + ") " +
                  std::to_string(q) + ") 0 " + res + ")";
          }
          return "if (lt j " + std::to_string(raw.threshold) + ") " + e + " " +
                 res;
        }() + "))";
    const auto via_term = evaluate(parse_term(term), filter_oracles(start));
    o.require(via_term == scan.value_or(0), "mu term disagrees: " + term);
  }
  o.detail = "100 certified functions, " + std::to_string(empty_cases) +
             " with empty zero set";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Ultralimits.

std::uint64_t cell_of(const Rational& v, unsigned k) {
  // floor(v * 2^k) by exact integer division.
  return static_cast<std::uint64_t>((v.numerator() << k) / v.denominator());
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(6006);
  constexpr unsigned kPrecision = 10;
  int constant_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool constant = trial % 5 == 0;
    auto dyadic = [&] {
      const unsigned m = uniform(rng, 0, 12);
      return Rational(static_cast<std::int64_t>(uniform(rng, 0, 1u << m)),
                      std::int64_t{1} << m);
    };
    std::vector<Rational> prefix, cycle;
    for (auto n = uniform(rng, 0, 6); n > 0; --n) prefix.push_back(dyadic());
    if (constant) {
      cycle.assign(uniform(rng, 1, 3), dyadic());
      ++constant_cases;
    } else {
      for (auto n = uniform(rng, 1, 12); n > 0; --n) cycle.push_back(dyadic());
    }
    const UPSeq seq(prefix, cycle);
    const std::uint64_t window = prefix.size() + 2 * cycle.size();

    std::vector<TieBreak> flips = {coin(rng) ? TieBreak::kGeneratorFirst
                                             : TieBreak::kComplementFirst};
    if (constant) {
      flips = {TieBreak::kGeneratorFirst, TieBreak::kComplementFirst};
    }
    for (TieBreak tb : flips) {
      UltralimitOptions opts;
      opts.filter.tiebreak = tb;
      UltralimitResult r;
      try {
        r = ultralimit(seq, kPrecision, trivial_filter(), opts);
      } catch (const Error& e) {
        o.require(false, std::string("ultralimit failed: ") + e.what());
        continue;
      }
      o.require(r.trace.levels.size() == kPrecision + 1, "level count");
      o.require(verify_nesting(r.trace).passed(), "verify_nesting");
      o.require(verify_witness(r.trace, seq).passed(), "verify_witness");
      for (std::size_t k = 0; k < r.trace.levels.size(); ++k) {
        const auto& lv = r.trace.levels[k];
        bool infinite = false;
        for (std::uint64_t n = 0; n < window; ++n) {
          const bool in_cell = cell_of(seq.at(n), lv.level) == lv.choice;
          o.require(lv.level_set.member(n) == in_cell,
                    "level set differs from the cell model");
          if (k > 0 && lv.level_set.member(n)) {
            o.require(r.trace.levels[k - 1].level_set.member(n), "nesting");
          }
          if (n >= prefix.size() && in_cell) infinite = true;
        }
        o.require(infinite, "chosen level set is finite");
      }
      // Some value attained infinitely often lies in the interval.
      o.require(std::any_of(cycle.begin(), cycle.end(),
                            [&](const Rational& v) {
                              return r.low <= v && v < r.high;
                            }),
                "interval holds no cluster point");
      if (constant) {
        o.require(r.low <= cycle[0] && cycle[0] < r.high,
                  "interval misses the limit");
      }
      const auto w = subsequence_witness(r.trace, seq);
      for (std::size_t i = 0; i < w.size(); ++i) {
        o.require(w[i].first == kth_element(r.trace.levels[i].level_set, i),
                  "g(k) is not the k-th element");
        for (std::size_t j = 0; j < w.size(); ++j) {
          Rational gap = w[i].second - w[j].second;
          if (gap < 0) gap = -gap;
          const unsigned lo = static_cast<unsigned>(std::min(i, j));
          const Rational bound =
              lo == 0 ? Rational(2) : Rational(1, std::int64_t{1} << (lo - 1));
          o.require(gap <= bound, "Cauchy rate violated");
        }
      }
    }
  }
  const double secs = seconds_since(start);
  o.require(secs < 30.0, "took " + std::to_string(secs) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "100 sequences at k = 10, %d eventually constant, %.2f s",
                constant_cases, secs);
  o.detail = buf;
  return o;
}

// ---------------------------------------------------------------------------
// 7. Elimination corpus.

Inputs corpus_inputs(const std::string& text) {
  Inputs out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto at = line.find("; inputs:");
    if (at == std::string::npos) continue;
    std::istringstream items(line.substr(at + 9));
    for (std::string item; std::getline(items, item, ',');) {
      const auto eq = item.find('=');
      std::string name = item.substr(0, eq);
      name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
      out[name] = std::stoull(item.substr(eq + 1));
    }
  }
  return out;
}

unsigned site_depth(const TermPtr& arg) {
  unsigned inner = 0;
  const TermPtr body = std::holds_alternative<Lam>(arg->node)
                           ? std::get<Lam>(arg->node).body
                           : std::get<Cert>(arg->node).fn;
  for (const auto& s : collect_usites(body)) {
    inner = std::max(inner, site_depth(s.arg));
  }
  return inner + 1;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e :
       std::filesystem::directory_iterator(ULTRA_CORPUS_DIR)) {
    if (e.path().extension() == ".term") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  o.require(files.size() >= 10, "corpus has fewer than 10 terms");
  std::size_t instances = 0, forced_terms = 0;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    const std::string text = read_file(path.string());
    try {
      const TermPtr t = parse_term(text);
      const Inputs inputs = corpus_inputs(text);
      const auto sites = collect_usites(t);
      o.require(!sites.empty() && sites.size() <= 4,
                name + ": site count " + std::to_string(sites.size()));
      unsigned depth = 0;
      for (const auto& s : sites) depth = std::max(depth, site_depth(s.arg));
      o.require(depth <= 3, name + ": nesting depth " + std::to_string(depth));

      std::vector<EliminateResult> runs;
      for (TieBreak tb :
           {TieBreak::kGeneratorFirst, TieBreak::kComplementFirst}) {
        EliminateOptions opts;
        opts.filter.tiebreak = tb;
        EliminateResult r = eliminate(t, inputs, opts);
        const Report uqf = verify_trace(r.trace, opts.filter);
        o.require(uqf.passed(), name + ": " +
                                    (uqf.first_failure()
                                         ? uqf.first_failure()->detail
                                         : std::string()));
        instances += traced_instances(r.trace).size();
        o.require(evaluate_with_filter(t, inputs, r.trace.filter, opts) ==
                      r.value,
                  name + ": re-evaluation differs");
        o.require(verify_axioms(r.trace.filter).passed(),
                  name + ": final filter fails the axioms");
        for (std::size_t i = 1; i < r.trace.stages.size(); ++i) {
          o.require(subset(r.trace.stages[i].core, r.trace.stages[i - 1].core),
                    name + ": stage cores not decreasing");
        }
        runs.push_back(std::move(r));
      }
      const auto& stages = runs[0].trace.stages;
      const bool forced = std::all_of(stages.begin(), stages.end(),
                                      [](const Stage& s) { return s.forced; });
      if (forced) {
        ++forced_terms;
        o.require(runs[0].value == runs[1].value,
                  name + ": forced term depends on the tie-break");
      }
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  o.detail = std::to_string(files.size()) + " terms, " +
             std::to_string(forced_terms) + " forced, " +
             std::to_string(instances) + " U-matrix instances";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Extensionality and characteristic normalization.

// A characteristic term for the raw description, with `miss` as the value
// off the set.
std::string char_term(const RawSet& s, const std::string& miss) {
  std::string prefix = miss, residue = miss;
  for (auto n : s.exceptions) {
    prefix = "(if (eq j " + std::to_string(n) + ") 0 " + prefix + ")";
  }
  for (auto r : s.residues) {
    residue = "(if (eq (mod j " + std::to_string(s.period) + ") " +
              std::to_string(r) + ") 0 " + residue + ")";
  }
  return "(lam j:0. if (lt j " + std::to_string(s.threshold) + ") " + prefix +
         " " + residue + ")";
}

Outcome criterion8() {
  Outcome o;
  Rng rng(8008);
  const std::vector<std::string> misses = {"1", "7", "(S (mod j 5))",
                                           "(add 2 j)", "(max 1 (mul 3 j))"};
  for (int trial = 0; trial < 200; ++trial) {
    const RawSet raw = random_raw(rng, 8, 10);
    const UPSet s = raw.build();
    const RawSet r1 = inflate(raw, uniform(rng, 0, 4), uniform(rng, 1, 3));
    const RawSet r2 = inflate(raw, uniform(rng, 0, 4), uniform(rng, 1, 3));
    const std::string e1 = char_term(r1, "1");
    std::string e2 = char_term(r2, misses[rng() % misses.size()]);
    if (e2 == e1) e2 = char_term(r2, "(S (mod j 5))");
    o.require(e1 != e2, "pair not distinct");

    // The terms denote the set: direct evaluation at every point.
    Evaluator ev({});
    const Value f1 = ev.eval(parse_term(e1), {});
    const Value f2 = ev.eval(parse_term(e2), {});
    const std::uint64_t h = r1.threshold + r2.threshold + r1.period * r2.period;
    for (std::uint64_t j = 0; j < h; ++j) {
      o.require((ev.apply_numeral(f1, j) == 0) == raw.member(j), "e1 wrong");
      o.require((ev.apply_numeral(f2, j) == 0) == raw.member(j), "e2 wrong");
    }
    o.require(to_upset(parse_term(e1), {}) == s, "to_upset e1");
    o.require(to_upset(parse_term(e2), {}) == s, "to_upset e2");

    PartialFilter f = trivial_filter();
    const FilterOptions opts{
        coin(rng) ? TieBreak::kGeneratorFirst : TieBreak::kComplementFirst,
        16};
    if (coin(rng)) f = extend(f, {random_raw(rng, 6, 6).build()}, opts);
    f = extend_with_missing(f, {s}, opts);
    const Oracles oracles = filter_oracles(f);
    const auto v1 = evaluate(parse_term("U " + e1), oracles);
    const auto v2 = evaluate(parse_term("U " + e2), oracles);
    const auto v3 = evaluate(
        parse_term("U (lam n:0. min (" + e2 + " n) 1)"), oracles);
    o.require(v1 == v2, "extensionality: verdicts differ");
    o.require(v2 == v3, "normalization: verdicts differ");
    o.require(v1 == (f.contains(s) ? 0u : 1u), "verdict differs from filter");

    // Both representations inside one elimination run.
    const TermPtr both =
        parse_term("add (mul 2 (U " + e1 + ")) (U " + e2 + ")");
    EliminateOptions eopts;
    eopts.filter = opts;
    const EliminateResult r = eliminate(both, {}, eopts);
    o.require(r.value == 0 || r.value == 3, "eliminate separates equal sets");
    o.require(r.trace.filter.algebra().generator_count() <= 1,
              "equal sets added twice");
  }
  o.detail = "200 pairs";
  return o;
}

// ---------------------------------------------------------------------------
// 9. Differential evaluation and the recursor equations.

Outcome criterion9() {
  Outcome o;
  TermGen gen(9009);
  std::size_t numeric = 0, overflow = 0;
  for (int i = 0; i < 1000; ++i) {
    const unsigned arity = i % 3;
    const TermPtr t = gen.function_term(arity, 2 + i % 5);
    std::vector<std::uint64_t> args;
    for (unsigned a = 0; a < arity; ++a) args.push_back(gen.rng()() % 30);
    o.require(typecheck(t).degree() <= 1, "degree above 1");
    std::optional<std::uint64_t> ref, got;
    try {
      ref = ref_numeral(t, args);
    } catch (const RefOverflow&) {
    }
    try {
      got = evaluate(t, {}, {}, args);
    } catch (const Error& e) {
      o.require(e.kind() == ErrorKind::kArithmeticOverflow,
                std::string("evaluator error: ") + e.what());
    }
    o.require(got == ref, "disagreement on " + print_term(t));
    (ref ? numeric : overflow)++;
  }
  // Repeated squaring crosses 2^64 after a few rounds.
  for (std::uint64_t k = 0; k < 12; ++k) {
    for (std::uint64_t base : {2u, 3u, 255u}) {
      const TermPtr t = parse_term("rec " + std::to_string(k) + " " +
                                   std::to_string(base) +
                                   " (lam a:0. lam b:0. mul a a)");
      std::optional<std::uint64_t> ref, got;
      try {
        ref = ref_numeral(t);
      } catch (const RefOverflow&) {
      }
      try {
        got = evaluate(t, {});
      } catch (const Error& e) {
        o.require(e.kind() == ErrorKind::kArithmeticOverflow, e.what());
      }
      o.require(got == ref, "disagreement on " + print_term(t));
      (ref ? numeric : overflow)++;
    }
  }

  int triples = 0;
  while (triples < 100) {
    const std::uint64_t x = gen.rng()() % 20;
    const std::uint64_t y = gen.rng()() % 1000;
    const std::string z = print_term(gen.step_term(3));
    const std::string xs = std::to_string(x), ys = std::to_string(y);
    try {
      const auto base = evaluate(parse_term("rec 0 " + ys + " " + z), {});
      const auto lhs = evaluate(
          parse_term("rec " + std::to_string(x + 1) + " " + ys + " " + z), {});
      const auto rhs = evaluate(
          parse_term(z + " (rec " + xs + " " + ys + " " + z + ") " + xs), {});
      o.require(base == y, "rec 0 y z != y");
      o.require(lhs == rhs, "rec (x+1) y z != z (rec x y z) x");
      o.require(lhs == ref_numeral(parse_term("rec " + std::to_string(x + 1) +
                                              " " + ys + " " + z)),
                "recursor disagrees with the reference");
      ++triples;
    } catch (const Error&) {
      // Overflowing steps are redrawn.
    } catch (const RefOverflow&) {
    }
  }
  o.detail = "1036 terms (" + std::to_string(numeric) + " numeric, " +
             std::to_string(overflow) +
             " overflow in both), 100 recursor triples; rec 0 y z = y";
  return o;
}

// ---------------------------------------------------------------------------
// 10. Determinism of the CLI.

Outcome criterion10() {
  Outcome o;
  const auto cases = load_golden_cases(ULTRA_GOLDEN_DIR, ULTRA_TEST_DATA);
  for (const auto& c : cases) {
    const std::string expected = read_file(golden_path(ULTRA_GOLDEN_DIR, c));
    for (int rep = 0; rep < 3; ++rep) {
      o.require(run_golden_case(c) == expected,
                c.name + " differs on run " + std::to_string(rep + 1));
    }
  }
  // Trace files written by separate runs.
  const std::string dir = ULTRA_TEST_OUT;
  std::vector<std::string> bytes;
  for (int rep = 0; rep < 2; ++rep) {
    const std::string path = dir + "/determinism_" + std::to_string(rep) + ".json";
    std::ostringstream out, err;
    cli::run({"--seed", "11", "eliminate", "--term",
              std::string(ULTRA_CORPUS_DIR) + "/07_four_sites.term", "--trace",
              path},
             out, err);
    bytes.push_back(read_file(path));
  }
  o.require(!bytes[0].empty() && bytes[0] == bytes[1], "trace files differ");
  o.detail = std::to_string(cases.size()) + " golden cases x 3 runs, trace file x 2";
  return o;
}

void print(int n, const std::string& name, const Outcome& o) {
  std::cout << "criterion " << (n < 10 ? " " : "") << n << ": "
            << (o.passed ? "PASS" : "FAIL") << "  " << name << " ("
            << o.detail << ")\n";
  for (const auto& f : o.failures) std::cout << "      " << f << "\n";
  std::cout.flush();
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const std::string& name, const Outcome& o) {
    print(n, name, o);
    all = all && o.passed;
  };
  report(1, "set algebra vs bit vectors", criterion1());

  StagedSummary staged = staged_runs();
  char buf[160];
  std::snprintf(buf, sizeof buf, "200 runs, %zu stages, %.2f s", staged.stages,
                staged.seconds);
  staged.axioms.detail = buf;
  staged.axioms.require(staged.seconds < 30.0, "took too long");
  report(2, "filter axioms on staged constructions", staged.axioms);
  staged.conservative.detail = std::to_string(staged.decided) +
                               " decisions, " +
                               std::to_string(staged.rechecked) +
                               " re-checked at later stages";
  report(3, "extension conservativity", staged.conservative);

  report(4, "finite partition property", criterion4());
  report(5, "mu through the filter", criterion5());
  report(6, "ultralimit nesting, cluster point and rate", criterion6());
  report(7, "elimination corpus", criterion7());
  report(8, "extensionality and normalization", criterion8());
  report(9, "evaluator differential and recursor", criterion9());
  report(10, "CLI determinism", criterion10());
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}
