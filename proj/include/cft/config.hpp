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

#ifndef CFT_CONFIG_HPP
#define CFT_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "cft/cm.hpp"

namespace cft {

struct RunConfig {
    long precision = 128;         // decimal digits
    long guard = 10;              // extra working digits
    long max_terms = 20000;
    std::vector<long> n_set = {1, 2, 3, 4, 5, 6, -1};
    int retry_budget = 256;
    long separation_digits = 0;   // 0: precision / 2
    long recognition_digits = 20;
    long size_guard_digits = 5000;
    bool timings = false;
    std::string output;

    EvalConfig eval() const;
    CmConfig cm() const;
};

/// Applies one key=value setting.  Unknown keys and malformed values throw
/// InvalidArgument.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
/// Lines "key = value"; '#' starts a comment.
void apply_config_file(RunConfig& cfg, const std::string& path);
/// CFT_PRECISION, when set.
void apply_environment(RunConfig& cfg);

std::vector<long> parse_long_list(const std::string& s, char sep = ',');

}  // namespace cft

#endif  // CFT_CONFIG_HPP
