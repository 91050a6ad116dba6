// Copyright 2026 The hessaut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HESSAUT_ACCEPTANCE_H_
#define HESSAUT_ACCEPTANCE_H_

// The numbered end-to-end checks, shared by the acceptance test binary and
// `hessaut verify`.

#include <ostream>
#include <string>
#include <vector>

namespace hessaut {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  // Adds the slower cases (p = 11 oracle runs, wider iso grid).
  bool extended = false;
  unsigned threads = 0;
};

// Suites: all, forms, curve, detrep, algebra, aut, iso, scan.  Throws
// std::invalid_argument for an unknown name.
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);

// Runs the suite, printing one line per criterion to `log` if given.
std::vector<CriterionResult> run_suite(const std::string& suite, const AcceptanceOptions& opts,
                                       std::ostream* log);

// "PASS [3] title: detail (0.1 s)".
std::string format_result(const CriterionResult& r);

}  // namespace hessaut

#endif  // HESSAUT_ACCEPTANCE_H_
