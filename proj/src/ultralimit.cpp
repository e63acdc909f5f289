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

#include "ultra/ultralimit.hpp"

#include <algorithm>
#include <cctype>

#include "ultra/error.hpp"

namespace ultra {
namespace {

std::int64_t parse_int(const std::string& text) {
  if (text.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty number in rational");
  }
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "malformed number '" + text + "'");
  }
  return v;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" +
         std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw Error(ErrorKind::kInvalidArgument, "zero denominator in " + text);
    }
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 17 ||
        !std::all_of(frac.begin(), frac.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorKind::kInvalidArgument,
                  "malformed decimal '" + text + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t whole = parse_int(dot == 0 ? "0" : text.substr(0, dot));
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac);
    return Rational(whole * scale + part, scale);
  }
  return Rational(parse_int(text));
}

UPSeq::UPSeq(std::vector<Rational> prefix, std::vector<Rational> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "sequence cycle is empty");
  }
  if (cycle_.size() > kPeriodCap) {
    throw Error(ErrorKind::kPeriodOverflow, "sequence cycle too long");
  }
  auto check = [](const Rational& v) {
    if (v < 0 || v > 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sequence value " + rational_to_string(v) +
                      " is outside [0, 1]");
    }
  };
  std::for_each(prefix_.begin(), prefix_.end(), check);
  std::for_each(cycle_.begin(), cycle_.end(), check);
}

Rational UPSeq::at(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

std::uint64_t cell_index(const Rational& v, unsigned level) {
  const __int128 scaled =
      static_cast<__int128>(v.numerator()) * (__int128{1} << level);
  return static_cast<std::uint64_t>(scaled / v.denominator());
}

Rational cell_low(std::uint64_t index, unsigned level) {
  return Rational(static_cast<std::int64_t>(index),
                  std::int64_t{1} << level);
}

Rational cell_high(std::uint64_t index, unsigned level) {
  return cell_low(index + 1, level);
}

UPSet LevelSets::at(std::uint64_t i) const {
  if (i >= size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cell index " + std::to_string(i) + " out of range");
  }
  auto it = cells.find(i);
  return it == cells.end() ? UPSet::empty() : it->second;
}

LevelSets level_sets(const UPSeq& seq, unsigned level, unsigned max_level) {
  if (level > max_level) {
    throw Error(ErrorKind::kInvalidArgument,
                "precision " + std::to_string(level) + " exceeds cap " +
                    std::to_string(max_level));
  }
  const std::uint64_t threshold = seq.prefix().size();
  const std::uint64_t period = seq.cycle().size();
  std::map<std::uint64_t, std::pair<std::vector<bool>, std::vector<bool>>>
      bits;
  auto slot = [&](std::uint64_t i) -> auto& {
    auto [it, fresh] = bits.try_emplace(i);
    if (fresh) {
      it->second.first.assign(threshold, false);
      it->second.second.assign(period, false);
    }
    return it->second;
  };
  for (std::uint64_t n = 0; n < threshold; ++n) {
    slot(cell_index(seq.prefix()[n], level)).first[n] = true;
  }
  for (std::uint64_t r = 0; r < period; ++r) {
    // n >= threshold with n mod period == r reads cycle[(n - threshold) mod
    // period].
    const std::uint64_t pos = (r + period - threshold % period) % period;
    slot(cell_index(seq.cycle()[pos], level)).second[r] = true;
  }
  LevelSets out;
  out.level = level;
  for (auto& [i, b] : bits) {
    UPSet s = UPSet::from_bits(std::move(b.first), std::move(b.second));
    if (!s.is_empty()) out.cells.emplace(i, std::move(s));
  }
  return out;
}

UltralimitResult ultralimit(const UPSeq& seq, unsigned precision,
                            const PartialFilter& filter,
                            const UltralimitOptions& options) {
  if (precision > options.max_level) {
    throw Error(ErrorKind::kInvalidArgument,
                "precision " + std::to_string(precision) + " exceeds cap " +
                    std::to_string(options.max_level));
  }
  PartialFilter current = filter;
  DyadicTrace trace;
  for (unsigned k = 0; k <= precision; ++k) {
    LevelSets sets = level_sets(seq, k, options.max_level);
    std::vector<std::uint64_t> indices;
    std::vector<UPSet> parts;
    for (const auto& [i, s] : sets.cells) {
      indices.push_back(i);
      parts.push_back(s);
    }
    Selection sel = select_from_partition(current, parts, options.filter);
    current = sel.filter;
    const UPSet& chosen = parts[sel.index];
    trace.levels.push_back(
        {k, indices[sel.index], chosen, kth_element(chosen, k), current});
  }
  const auto& last = trace.levels.back();
  return {cell_low(last.choice, precision), cell_high(last.choice, precision),
          std::move(trace), std::move(current)};
}

Report verify_nesting(const DyadicTrace& trace) {
  Report report;
  auto& nesting = report.add("nesting");
  auto& infinite = report.add("infinite-level-sets");
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const auto& lv = trace.levels[i];
    if (!lv.level_set.is_infinite()) {
      fail_once(infinite, "level " + std::to_string(lv.level) +
                              " chose a finite set");
    }
    if (i > 0 && !subset(lv.level_set, trace.levels[i - 1].level_set)) {
      fail_once(nesting, "level " + std::to_string(lv.level) +
                             " set is not inside level " +
                             std::to_string(trace.levels[i - 1].level));
    }
  }
  return report;
}

std::vector<std::pair<std::uint64_t, Rational>> subsequence_witness(
    const DyadicTrace& trace, const UPSeq& seq) {
  std::vector<std::pair<std::uint64_t, Rational>> out;
  out.reserve(trace.levels.size());
  for (const auto& lv : trace.levels) {
    out.emplace_back(lv.witness, seq.at(lv.witness));
  }
  return out;
}

Report verify_witness(const DyadicTrace& trace, const UPSeq& seq) {
  Report report;
  auto& cells = report.add("cell-containment");
  auto& rate = report.add("cauchy-rate");
  const auto witness = subsequence_witness(trace, seq);
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const auto& lv = trace.levels[i];
    if (!lv.level_set.member(lv.witness)) {
      fail_once(cells, "g(" + std::to_string(lv.level) +
                           ") is not in its level set");
    }
    if (cell_index(witness[i].second, lv.level) != lv.choice) {
      fail_once(cells, "x_g(" + std::to_string(lv.level) +
                           ") lies outside the chosen cell");
    }
    for (std::size_t j = 0; j < witness.size(); ++j) {
      const unsigned lo = std::min(lv.level, trace.levels[j].level);
      const Rational bound = lo == 0 ? Rational(2)
                                     : Rational(1, std::int64_t{1} << (lo - 1));
      Rational gap = witness[i].second - witness[j].second;
      if (gap < 0) gap = -gap;
      if (gap > bound) {
        fail_once(rate, "levels " + std::to_string(lv.level) + " and " +
                            std::to_string(trace.levels[j].level) +
                            " differ by " + rational_to_string(gap));
      }
    }
  }
  return report;
}

}  // namespace ultra
