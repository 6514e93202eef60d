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
#include <cstdlib>
#include <fstream>

#include "cft/config.hpp"
#include "cft/error.hpp"
#include "cft/report.hpp"
#include "doctest.h"

using namespace cft;

TEST_CASE("rationals and field elements serialize as strings") {
    const auto x = CycElem::rational(3, Rat(6, 5)) + CycElem::zeta(3) * Rat(97, 546);
    CHECK(to_json(x).dump() == R"({"m":3,"coeffs":["6/5","97/546"]})");
    CHECK(to_json(Rat(-4, 2)).dump() == R"("-2")");
    CHECK(to_json(Int("123456789012345678901234567890")).dump() == R"("123456789012345678901234567890")");
    const auto z = to_json(BigComplex(0.5, -2.0, 20));
    CHECK(z["re"].get<std::string>().rfind("0.5", 0) == 0);
    CHECK(z["im"].get<std::string>().rfind("-2.", 0) == 0);
}

TEST_CASE("certificate serialization is deterministic") {
    const auto a = to_json(build_trace_generator(5)).dump();
    const auto b = to_json(build_trace_generator(5)).dump();
    CHECK(a == b);
    const auto j = Json::parse(a);
    CHECK(j["denominators"] == Json::array({"11", "111"}));
    CHECK(j["fields"].size() == 2);
    CHECK(j["passed"] == true);
}

TEST_CASE("run configuration layering") {
    RunConfig cfg;
    CHECK(cfg.precision == 128);
    CHECK(cfg.cm().separation() == 64);

    apply_setting(cfg, " precision ", " 60 ");
    CHECK(cfg.precision == 60);
    CHECK(cfg.eval().digits == 60);
    apply_setting(cfg, "n_set", "1,2,-1");
    CHECK(cfg.n_set == std::vector<long>{1, 2, -1});
    apply_setting(cfg, "timings", "yes");
    CHECK(cfg.timings);

    CHECK_THROWS_AS(apply_setting(cfg, "precision", "12"), Error);
    CHECK_THROWS_AS(apply_setting(cfg, "precision", "6x"), Error);
    CHECK_THROWS_AS(apply_setting(cfg, "colour", "red"), Error);
    CHECK_THROWS_AS(apply_setting(cfg, "n_set", "1,,2"), Error);

    const std::string path = "test_report_cfg.txt";
    {
        std::ofstream f(path);
        f << "# comment\n\nguard = 4  # trailing\nseparation_digits=30\n";
    }
    apply_config_file(cfg, path);
    CHECK(cfg.guard == 4);
    CHECK(cfg.cm().separation() == 30);
    {
        std::ofstream f(path);
        f << "guard 4\n";
    }
    CHECK_THROWS_AS(apply_config_file(cfg, path), Error);
    std::remove(path.c_str());

    setenv("CFT_PRECISION", "77", 1);
    apply_environment(cfg);
    CHECK(cfg.precision == 77);
    unsetenv("CFT_PRECISION");
}
