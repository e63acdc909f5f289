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

#ifndef ULTRA_REPORT_HPP_
#define ULTRA_REPORT_HPP_

#include <deque>
#include <string>

namespace ultra {

struct ClauseResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Outcome of a verification pass. A failing clause carries the first
// counterexample found for it.
struct Report {
  std::deque<ClauseResult> clauses;  // stable references across add()

  bool passed() const {
    for (const auto& c : clauses) {
      if (!c.passed) return false;
    }
    return true;
  }

  const ClauseResult* first_failure() const {
    for (const auto& c : clauses) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }

  ClauseResult& add(std::string name) {
    clauses.push_back({std::move(name), true, {}});
    return clauses.back();
  }
};

inline void fail_once(ClauseResult& clause, const std::string& detail) {
  if (clause.passed) {
    clause.passed = false;
    clause.detail = detail;
  }
}

}  // namespace ultra

#endif  // ULTRA_REPORT_HPP_
