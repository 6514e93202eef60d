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
#include <random>

#include "cft/coprime_seq.hpp"
#include "cft/error.hpp"
#include "doctest.h"

using namespace cft;

namespace {
std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Independent restatement: evaluate the recursion with a running product
// kept as a separate list.
std::vector<Int> recursion_oracle(const std::vector<Int>& n) {
    std::vector<Int> m{1};
    for (const auto& x : n) {
        Int prod = 1;
        for (const auto& y : m) prod *= y;
        m.push_back(1 + x * prod);
    }
    return {m.begin() + 1, m.end()};
}
}  // namespace

TEST_CASE("coprime_seq examples") {
    CHECK(coprime_seq(ints({2, 3})).outputs == ints({3, 10}));
    CHECK(coprime_seq(ints({0})).outputs == ints({1}));
    CHECK(coprime_seq(ints({1, 1, 1})).outputs == ints({2, 3, 7}));
    CHECK(coprime_seq(ints({10, 10})).outputs == ints({11, 111}));
    CHECK(coprime_seq(ints({4, 0, 1, 3})).outputs == ints({5, 1, 6, 91}));
}

TEST_CASE("coprime_seq errors") {
    try {
        coprime_seq({});
        FAIL("expected EmptyInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyInput);
    }
    CHECK_THROWS_AS(coprime_seq(ints({1, -2})), Error);
    CHECK_THROWS_AS(verify_coprime_properties(CoprimeSeq{ints({1, 1}), ints({2, 4})}), Error);
    CHECK_THROWS_AS(verify_coprime_properties(CoprimeSeq{ints({3}), ints({3})}), Error);
}

TEST_CASE("coprime_seq properties on random inputs") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> len(1, 8), val(0, 999999);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Int> n;
        bool all_positive = true;
        for (long i = 0, l = len(rng); i < l; ++i) {
            n.emplace_back(trial % 7 == 0 && i == 0 ? 0 : val(rng));
            all_positive = all_positive && n.back() > 0;
        }
        const auto seq = coprime_seq(n);
        CHECK(seq.outputs == recursion_oracle(n));
        for (size_t i = 0; i < n.size(); ++i) {
            CHECK(seq.outputs[i] >= 1 + n[i]);
            CHECK(gcd(seq.outputs[i], n[i]) == 1);
            for (size_t j = 0; j < i; ++j) CHECK(gcd(seq.outputs[i], seq.outputs[j]) == 1);
            if (all_positive) CHECK(seq.outputs[i] >= 2);
        }
    }
}
