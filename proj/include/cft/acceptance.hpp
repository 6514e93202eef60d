/*
   Copyright 2026 The cft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CFT_ACCEPTANCE_HPP
#define CFT_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "cft/config.hpp"
#include "cft/report.hpp"

namespace cft {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool checks_passed = false;
    double seconds = 0;
    double budget = 0;  // seconds
    std::string detail;
    Json report;

    bool within_budget() const { return seconds < budget; }
    bool passed() const { return checks_passed && within_budget(); }
};

constexpr int kCriteria = 12;

/// Runs one acceptance criterion (1..12).  Library errors are caught and
/// reported as a failed check.
CriterionResult run_criterion(int id, const RunConfig& cfg);
/// All criteria, or the listed ones, in ascending order.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::vector<int> ids = {});

/// {"criteria": [...], "passed": bool}; timings only when cfg.timings.
Json acceptance_json(const std::vector<CriterionResult>& results, const RunConfig& cfg);

}  // namespace cft

#endif  // CFT_ACCEPTANCE_HPP
