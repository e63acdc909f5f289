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

#include "ultra/io.hpp"

#include <fstream>
#include <sstream>

#include "ultra/error.hpp"

namespace ultra {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("field '") + key + "' has the wrong type");
  }
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_number()) return parse_rational(v.dump());
  malformed("sequence values must be strings or numbers");
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values) out.push_back(rational_to_string(q));
  return out;
}

}  // namespace

Json to_json(const UPSet& s) {
  return {{"exceptions", s.exceptions()},
          {"threshold", s.threshold()},
          {"period", s.period()},
          {"residues", s.residues()}};
}

UPSet upset_from_json(const Json& j) {
  return UPSet::from_parts(field<std::vector<std::uint64_t>>(j, "exceptions"),
                           field<std::uint64_t>(j, "threshold"),
                           field<std::uint64_t>(j, "period"),
                           field<std::vector<std::uint64_t>>(j, "residues"));
}

static Json generators_json(const std::vector<UPSet>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(to_json(g));
  return out;
}

static std::vector<UPSet> generators_from(const Json& j) {
  const Json gens = field<Json>(j, "generators");
  if (!gens.is_array()) malformed("'generators' must be an array");
  std::vector<UPSet> out;
  for (const auto& g : gens) out.push_back(upset_from_json(g));
  return out;
}

Json to_json(const Algebra& a) {
  Json atoms = Json::array();
  for (const auto& atom : a.atoms()) {
    atoms.push_back({{"word", atom.word}, {"set", to_json(atom.set)}});
  }
  return {{"generators", generators_json(a.generators())}, {"atoms", atoms}};
}

Algebra algebra_from_json(const Json& j, std::size_t generator_cap) {
  return Algebra::span(generators_from(j), generator_cap);
}

Json to_json(const PartialFilter& f) {
  return {{"generators", generators_json(f.algebra().generators())},
          {"branch", f.branch()},
          {"core", to_json(f.core())}};
}

PartialFilter filter_from_json(const Json& j, std::size_t generator_cap) {
  Algebra a = Algebra::span(generators_from(j), generator_cap);
  return PartialFilter::from_branch(std::move(a),
                                    field<std::string>(j, "branch"));
}

Json to_json(const UPSeq& seq) {
  return {{"prefix", rationals(seq.prefix())}, {"cycle", rationals(seq.cycle())}};
}

UPSeq sequence_from_json(const Json& j) {
  auto read = [&](const char* key) {
    std::vector<Rational> out;
    if (!j.is_object() || !j.contains(key)) return out;
    if (!j.at(key).is_array()) {
      malformed(std::string("'") + key + "' must be an array");
    }
    for (const auto& v : j.at(key)) out.push_back(rational_from_json(v));
    return out;
  };
  return UPSeq(read("prefix"), read("cycle"));
}

Json to_json(const Config& c) {
  return {{"tiebreak", std::string(tiebreak_name(c.tiebreak))},
          {"max_precision", c.max_precision},
          {"fuel", c.fuel},
          {"generator_cap", c.generator_cap},
          {"seed", c.seed},
          {"mu_bound", c.mu_bound}};
}

Config config_from_json(const Json& j, Config c) {
  if (!j.is_object()) malformed("config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tiebreak") {
      c.tiebreak = parse_tiebreak(field<std::string>(j, "tiebreak"));
    } else if (key == "max_precision") {
      c.max_precision = field<unsigned>(j, "max_precision");
    } else if (key == "fuel") {
      c.fuel = field<std::uint64_t>(j, "fuel");
    } else if (key == "generator_cap") {
      c.generator_cap = field<std::size_t>(j, "generator_cap");
    } else if (key == "seed") {
      c.seed = field<std::uint64_t>(j, "seed");
    } else if (key == "mu_bound") {
      c.mu_bound = field<std::uint64_t>(j, "mu_bound");
    } else {
      malformed("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

Json to_json(const Report& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    clauses.push_back(entry);
  }
  return {{"passed", r.passed()}, {"clauses", clauses}};
}

Json to_json(const UltralimitResult& r, const Config& c) {
  Json levels = Json::array();
  for (const auto& l : r.trace.levels) {
    levels.push_back({{"level", l.level},
                      {"choice", l.choice},
                      {"cell", {rational_to_string(cell_low(l.choice, l.level)),
                                rational_to_string(cell_high(l.choice, l.level))}},
                      {"set", to_json(l.level_set)},
                      {"witness", l.witness},
                      {"branch", l.filter.branch()}});
  }
  return {{"interval", {rational_to_string(r.low), rational_to_string(r.high)}},
          {"levels", levels},
          {"filter", to_json(r.filter)},
          {"config", to_json(c)}};
}

Json to_json(const MuResult& r) {
  Json value = r.value ? Json(*r.value) : Json(nullptr);
  return {{"value", value},
          {"witness_set", to_json(r.witness_set)},
          {"filter", to_json(r.filter)}};
}

Json to_json(const EliminateResult& r, const Config& c) {
  Json stages = Json::array();
  for (const auto& s : r.trace.stages) {
    stages.push_back({{"site", s.site},
                      {"set", to_json(s.set)},
                      {"generators_before", s.generators_before},
                      {"generators_after", s.generators_after},
                      {"atoms_before", s.atoms_before},
                      {"atoms_after", s.atoms_after},
                      {"branch", s.branch},
                      {"core", to_json(s.core)},
                      {"member", s.member},
                      {"forced", s.forced}});
  }
  Json u = Json::array();
  for (const auto& s : r.trace.u_queries) u.push_back(to_json(s));
  Json k = Json::array();
  for (const auto& [n, s] : r.trace.k_queries) {
    k.push_back({{"n", n}, {"set", to_json(s)}});
  }
  return {{"value", r.value},
          {"stages", stages},
          {"filter", to_json(r.trace.filter)},
          {"u_queries", u},
          {"k_queries", k},
          {"config", to_json(c)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

}  // namespace ultra
