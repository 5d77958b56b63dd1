// Copyright 2026 The ffsi Authors
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

#ifndef FFSI_CLI_SUITES_HPP
#define FFSI_CLI_SUITES_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ffsi::cli {

struct CheckResult {
  std::string suite;
  int criterion = 0;
  std::string name;
  bool pass = false;
  /// Informational rows are reported but never decide a verdict.
  bool informational = false;
  std::string detail;
};

struct SuiteOptions {
  unsigned threads = 0;  // 0 selects the machine parallelism
};

/// identities, facfun-oracle, bounds, variety, lfunc.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite or "all". Throws DomainError for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options = {});

/// Per criterion: true when every non-informational row passes.
std::map<int, bool> criterion_verdicts(const std::vector<CheckResult>& results);

bool all_pass(const std::vector<CheckResult>& results);

nlohmann::json results_json(const std::string& suite, const std::vector<CheckResult>& results);
std::string results_csv(const std::vector<CheckResult>& results);
std::string results_table(const std::vector<CheckResult>& results);

}  // namespace ffsi::cli

#endif  // FFSI_CLI_SUITES_HPP
