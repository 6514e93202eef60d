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

#include <doctest.h>

#include "cft/error.hpp"
#include "cft/trace_gen.hpp"
#include "oracles.hpp"

using namespace cft;

TEST_CASE("default_subfield_generator") {
    const auto h5 = subgroup_generated_by(5, {4});
    CHECK(default_subfield_generator(h5) == CycElem::zeta(5, 1) + CycElem::zeta(5, 4));
    CHECK(default_subfield_generator(trivial_subgroup(5)) == CycElem::zeta(5, 1));

    const auto h12 = subgroup_generated_by(12, {11});
    const auto g12 = default_subfield_generator(h12);
    CHECK(g12 == CycElem::zeta(12, 1) + CycElem::zeta(12, 11));
    CHECK(g12 * g12 == CycElem::rational(12, 3));

    // zero period at m=12, H={1,7}: search has to move on
    const auto h7 = subgroup_generated_by(12, {7});
    CHECK(rel_trace(CycElem::zeta(12, 1), h7).is_zero());
    const auto x = default_subfield_generator(h7);
    CHECK(generates(x, h7, full_group(12)));
    CHECK(is_algebraic_integer(x));

    try {
        default_subfield_generator(h7, 1);
        FAIL("expected GeneratorSearchExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GeneratorSearchExhausted);
    }
}

TEST_CASE("trace_budget") {
    const auto g = full_group(5);
    const CycElem sqrt5 = CycElem::zeta(5, 1) * Rat(2) + CycElem::zeta(5, 4) * Rat(2) + CycElem::rational(5, 1);
    REQUIRE(sqrt5 * sqrt5 == CycElem::rational(5, 5));
    auto b = trace_budget(5, {subgroup_generated_by(5, {4}), trivial_subgroup(5)}, {sqrt5, CycElem::zeta(5, 1)});
    CHECK(b.value == 10000);
    CHECK(b.radical == 10);

    auto b4 = trace_budget(4, {trivial_subgroup(4)}, {CycElem::zeta(4, 1)});
    CHECK(b4.value == 8);
    CHECK(b4.radical == 2);

    auto b3 = trace_budget(3, {trivial_subgroup(3)}, {CycElem::zeta(3, 1)});
    CHECK(b3.value == 6);
    CHECK(b3.radical == 6);

    try {
        trace_budget(5, {trivial_subgroup(5)}, {CycElem::zeta(5, 1) * Rat(1, 2)});
        FAIL("expected NotAlgebraicInteger");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAlgebraicInteger);
    }
    try {
        trace_budget(5, {trivial_subgroup(5)}, {sqrt5});
        FAIL("expected NotAGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAGenerator);
    }
}

TEST_CASE("build_trace_generator m=5") {
    auto c = build_trace_generator(5);
    REQUIRE(c.subgroups.size() == 2);
    CHECK(c.budget.value == 2500);  // default period has disc 5
    CHECK(c.budget.radical == 10);
    CHECK(c.denominators == std::vector<Int>{11, 111});
    CHECK(c.alpha == c.generators[0] * Rat(1, 11) + c.generators[1] * Rat(1, 111));
    CHECK(c.all_passed());

    auto raw = build_trace_generator(5, false);
    CHECK(raw.coprime_input == 2500);
    CHECK(raw.all_passed());
}

TEST_CASE("build_trace_generator small conductors") {
    for (long m : {3L, 4L, 5L, 7L, 8L, 9L, 11L, 12L, 15L, 16L}) {
        CAPTURE(m);
        auto c = build_trace_generator(m);
        CHECK(c.subgroups.size() == subgroup_lattice(m).size());
        CHECK(c.passed.size() == c.subgroups.size());
        CHECK(c.all_passed());
        for (const auto& a : c.generators) CHECK(is_algebraic_integer(a));
    }
    CHECK(build_trace_generator(12).subgroups.size() == 4);
    auto c3 = build_trace_generator(3);
    REQUIRE(c3.subgroups.size() == 1);
    CHECK(c3.alpha == CycElem::zeta(3, 1) * Rat(Int(1), c3.denominators[0]));
}

TEST_CASE("budget scaling by multiples of the radical") {
    for (long m : {5L, 8L, 12L}) {
        CAPTURE(m);
        const Int r = build_trace_generator(m).budget.radical;
        for (long k : {1L, 2L, 3L, 7L}) CHECK(build_trace_generator(m, true, 256, Int(r * k)).all_passed());
        try {
            build_trace_generator(m, true, 256, Int(r + 1));
            FAIL("expected InvalidArgument");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidArgument);
        }
    }
}

TEST_CASE("trace compatibility through chains") {
    for (long m : {8L, 12L, 15L, 16L}) {
        CAPTURE(m);
        auto c = build_trace_generator(m);
        for (const auto& hi : c.subgroups)
            for (const auto& hj : c.subgroups) {
                if (!hj.is_subgroup_of(hi) || hj == hi) continue;
                // Tr_{U/F_i} = Tr_{F_j/F_i} o Tr_{U/F_j}
                CHECK(rel_trace(rel_trace(c.alpha, hj), hi, hj) == rel_trace(c.alpha, hi));
            }
    }
}
