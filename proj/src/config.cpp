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

#include "cft/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cft/error.hpp"

namespace cft {

EvalConfig RunConfig::eval() const {
    EvalConfig e;
    e.digits = precision;
    e.guard = guard;
    e.max_terms = max_terms;
    return e;
}

CmConfig RunConfig::cm() const {
    CmConfig c;
    c.eval = eval();
    c.separation_digits = separation_digits;
    c.recognition_digits = recognition_digits;
    return c;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        const long x = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "setting '" + key + "' needs an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(ErrorKind::InvalidArgument, "setting '" + key + "' needs a boolean, got '" + v + "'");
}

}  // namespace

std::vector<long> parse_long_list(const std::string& s, char sep) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (item.empty()) fail(ErrorKind::InvalidArgument, "empty entry in list '" + s + "'");
        out.push_back(to_long("list", item));
    }
    if (out.empty()) fail(ErrorKind::InvalidArgument, "empty list");
    return out;
}

void apply_setting(RunConfig& cfg, const std::string& key_in, const std::string& value_in) {
    const std::string key = trim(key_in), value = trim(value_in);
    if (key == "precision") {
        cfg.precision = to_long(key, value);
        if (cfg.precision < kMinDigits) fail(ErrorKind::InvalidArgument, "precision below 16 digits");
    } else if (key == "guard") {
        cfg.guard = to_long(key, value);
        if (cfg.guard < 0) fail(ErrorKind::InvalidArgument, "negative guard digits");
    } else if (key == "max_terms") {
        cfg.max_terms = to_long(key, value);
    } else if (key == "n_set") {
        cfg.n_set = parse_long_list(value);
    } else if (key == "retry_budget") {
        cfg.retry_budget = static_cast<int>(to_long(key, value));
    } else if (key == "separation_digits") {
        cfg.separation_digits = to_long(key, value);
    } else if (key == "recognition_digits") {
        cfg.recognition_digits = to_long(key, value);
    } else if (key == "size_guard_digits") {
        cfg.size_guard_digits = to_long(key, value);
    } else if (key == "timings") {
        cfg.timings = to_bool(key, value);
    } else if (key == "output") {
        cfg.output = value;
    } else {
        fail(ErrorKind::InvalidArgument, "unknown setting '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read config file '" + path + "'");
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::InvalidArgument, path + ":" + std::to_string(n) + ": expected key = value");
        apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
}

void apply_environment(RunConfig& cfg) {
    if (const char* p = std::getenv("CFT_PRECISION"); p && *p) apply_setting(cfg, "precision", p);
}

}  // namespace cft
