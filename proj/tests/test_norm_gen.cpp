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
#include "cft/norm_gen.hpp"
#include "oracles.hpp"

using namespace cft;

namespace {

CycElem z(long m, long k) { return CycElem::zeta(m, k); }

// Every chain of subgroups from G down to {1}, steps strict.
void all_chains(long m, std::vector<SubgroupData>& cur, std::vector<std::vector<SubgroupData>>& out) {
    if (cur.back().size() == 1) {
        out.push_back(cur);
        return;
    }
    for (const auto& h : subgroup_lattice(m)) {
        if (h == cur.back() || !h.is_subgroup_of(cur.back())) continue;
        cur.push_back(h);
        all_chains(m, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("power_stable") {
    const auto g3 = full_group(3), t3 = trivial_subgroup(3);
    const auto b = power_stable(z(3, 1), t3, g3);
    CHECK(b == z(3, 1) * Rat(3) + CycElem::rational(3, 1));
    CHECK(b * b == CycElem::rational(3, -8) - z(3, 1) * Rat(3));

    const auto b5 = power_stable(z(5, 1), trivial_subgroup(5), full_group(5));
    for (long n = 1; n <= 6; ++n) CHECK(generates(b5.pow(n), trivial_subgroup(5), full_group(5)));

    const CycElem sqrt5 = (z(5, 1) + z(5, 4)) * Rat(2) + CycElem::rational(5, 1);
    const auto h = subgroup_generated_by(5, {4});
    const auto s = power_stable(sqrt5, h, full_group(5));
    CHECK(s * s == CycElem::rational(5, 46) + sqrt5 * Rat(6));

    try {
        power_stable(z(5, 1) * Rat(1, 2), trivial_subgroup(5), full_group(5));
        FAIL("expected NotAlgebraicInteger");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAlgebraicInteger);
    }
    try {
        power_stable(sqrt5, trivial_subgroup(5), full_group(5));
        FAIL("expected NotAGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAGenerator);
    }
}

TEST_CASE("norm element on named towers") {
    auto t5 = make_tower(5, {full_group(5), subgroup_generated_by(5, {4}), trivial_subgroup(5)});
    CHECK(t5.degrees == std::vector<long>{2, 2});
    auto c5 = build_norm_element(t5);
    CHECK(c5.all_passed());
    CHECK(c5.telescoping.size() == 1);

    auto t16 = make_tower(16, {subgroup_generated_by(16, {15}), trivial_subgroup(16)});
    CHECK(build_norm_element(t16).all_passed());

    auto t1 = make_tower(7, {full_group(7), trivial_subgroup(7)});
    auto c1 = build_norm_element(t1);
    CHECK(c1.beta == c1.step_generators[0]);
    CHECK(c1.beta == z(7, 1) * Rat(3) + CycElem::rational(7, 1));

    // non-strict step
    auto flat = make_tower(5, {full_group(5), full_group(5), subgroup_generated_by(5, {4}), trivial_subgroup(5)});
    CHECK(flat.degrees == std::vector<long>{1, 2, 2});
    CHECK(build_norm_element(flat).all_passed());
}

TEST_CASE("norm element over every maximal chain") {
    for (long m : {8L, 12L, 16L, 15L}) {
        std::vector<std::vector<SubgroupData>> chains;
        std::vector<SubgroupData> cur{full_group(m)};
        all_chains(m, cur, chains);
        for (const auto& ch : chains) {
            CAPTURE(m);
            CAPTURE(ch.size());
            auto c = build_norm_element(make_tower(m, ch));
            CHECK(c.all_passed());
            CHECK(!c.beta.is_zero());
            for (const auto& n : c.step_norms) CHECK(!n.is_zero());
            // last step telescoping, recomputed directly
            const size_t t = ch.size() - 1;
            if (t >= 2) {
                CycElem prefix = c.step_generators[0];
                for (size_t s = 1; s + 1 < t; ++s)
                    prefix = prefix * c.step_generators[s].pow(c.tower.degrees[s]) / c.step_norms[s];
                CHECK(rel_norm(c.beta, ch[t - 1]) == prefix.pow(c.tower.degrees[t - 1]));
            }
        }
    }
}

TEST_CASE("tower validation") {
    try {
        make_tower(5, {full_group(5), subgroup_generated_by(5, {4})});
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
    try {
        make_tower(12, {subgroup_generated_by(12, {5}), subgroup_generated_by(12, {7}), trivial_subgroup(12)});
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}
