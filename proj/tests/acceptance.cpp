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
// Runs every acceptance criterion at the default configuration (128 digits)
// and prints one line per criterion.  Optional arguments select criteria.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "cft/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    const cft::RunConfig cfg;  // CFT_PRECISION deliberately ignored: tolerances assume 128 digits
    bool all = true;
    for (const auto& r : cft::run_acceptance(cfg, ids)) {
        std::printf("criterion %2d: %s  %-58s %8.2fs / %4.0fs  %s\n", r.id, r.passed() ? "PASS" : "FAIL",
                    r.title.c_str(), r.seconds, r.budget,
                    r.checks_passed ? (r.within_budget() ? "ok" : "over time budget") : r.detail.c_str());
        std::fflush(stdout);
        all = all && r.passed();
    }
    return all ? 0 : 1;
}
