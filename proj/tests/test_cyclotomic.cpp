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

#include "cft/cyclotomic.hpp"
#include "cft/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cft;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

CycElem zeta(long m, long k = 1) { return CycElem::zeta(m, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(5) == std::vector<Int>{1, 1, 1, 1, 1});
    for (long m = 1; m <= 60; ++m) CHECK(static_cast<long>(cyclotomic_poly(m).size()) - 1 == euler_phi(m));
}

TEST_CASE("cyc_reduce") {
    CHECK(cyc_reduce(3, {{1, 1}, {2, 1}}).coeffs() == rats({-1, 0}));
    CHECK(cyc_reduce(4, {{2, 1}}).coeffs() == rats({-1, 0}));
    CHECK(cyc_reduce(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}).is_zero());
    CHECK(cyc_reduce(7, {{-1, 1}}) == zeta(7, 6));
    CHECK_THROWS_AS(cyc_reduce(0, {}), Error);

    SUBCASE("idempotent on random sparse input") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> mdist(1, 30), edist(-100, 100), cdist(-9, 9);
        for (int trial = 0; trial < 200; ++trial) {
            const long m = mdist(rng);
            std::map<long, Rat> raw;
            for (int i = 0; i < 6; ++i) raw[edist(rng)] += Rat(cdist(rng), 1 + (trial % 3));
            const CycElem x = cyc_reduce(m, raw);
            std::map<long, Rat> again;
            for (size_t k = 0; k < x.coeffs().size(); ++k) again[static_cast<long>(k)] = x.coeffs()[k];
            CHECK(cyc_reduce(m, again) == x);
            oracle::cplx direct = 0;
            for (auto& [e, c] : raw) direct += static_cast<long double>(c.get_d()) * std::polar(1.0L, 2 * std::numbers::pi_v<long double> * e / m);
            CHECK(std::abs(direct - oracle::embed(x)) < 1e-9L);
        }
    }
}

TEST_CASE("cyc_arith") {
    CHECK(cyc_arith(zeta(3), zeta(3, 2), ArithOp::mul) == CycElem::rational(3, 1));
    CHECK((zeta(5) + zeta(5, 4)) + (zeta(5, 2) + zeta(5, 3)) == CycElem::rational(5, -1));

    // 1 / (1 + zeta_3), checked by multiplying back
    const CycElem one_plus = CycElem::rational(3, 1) + zeta(3);
    const CycElem inv = cyc_arith(CycElem::rational(3, 1), one_plus, ArithOp::div);
    CHECK(inv * one_plus == CycElem::rational(3, 1));
    CHECK(inv == -zeta(3));

    CHECK_THROWS_AS(zeta(5) / CycElem(5), Error);

    SUBCASE("mixed conductors lift to the lcm") {
        const CycElem i = zeta(4);
        const CycElem w = zeta(3);
        const CycElem prod = i * w;
        CHECK(prod.conductor() == 12);
        CHECK(prod == zeta(12, 7));  // zeta_12^3 * zeta_12^4
        CHECK(zeta(6, 2) == zeta(3));
    }

    SUBCASE("field axioms on random elements") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<long> mdist(1, 24);
        for (int trial = 0; trial < 1000; ++trial) {
            const long m = mdist(rng);
            const CycElem x = oracle::random_elem(rng, m), y = oracle::random_elem(rng, m),
                          z = oracle::random_elem(rng, m);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == CycElem::rational(m, 1));
        }
    }

    SUBCASE("agrees with the complex embedding") {
        std::mt19937_64 rng(5);
        for (long m : {5L, 8L, 9L, 12L, 15L, 16L}) {
            const CycElem x = oracle::random_elem(rng, m), y = oracle::random_elem(rng, m);
            CHECK(std::abs(oracle::embed(x * y) - oracle::embed(x) * oracle::embed(y)) < 1e-9L);
            if (!y.is_zero()) CHECK(std::abs(oracle::embed(x / y) - oracle::embed(x) / oracle::embed(y)) < 1e-8L);
        }
    }
}

TEST_CASE("apply_aut") {
    CHECK(apply_aut(GaloisAut(3, 2), zeta(3)) == zeta(3, 2));
    std::mt19937_64 rng(1);
    const CycElem x = oracle::random_elem(rng, 7);
    CHECK(apply_aut(GaloisAut(7, 1), x) == x);
    CHECK(apply_aut(GaloisAut(5, 2), zeta(5) + zeta(5, 4)) == zeta(5, 2) + zeta(5, 3));
    CHECK_THROWS_AS(GaloisAut(6, 2), Error);
    // the numeric image is the conjugate embedding
    const CycElem y = oracle::random_elem(rng, 15);
    CHECK(std::abs(oracle::embed(apply_aut(7, y)) - oracle::embed(y, 7)) < 1e-9L);

    SUBCASE("automorphisms are ring homomorphisms") {
        std::mt19937_64 r(77);
        for (long m : {5L, 8L, 12L, 13L, 20L}) {
            for (long a : galois_group(m).elements) {
                const CycElem u = oracle::random_elem(r, m), v = oracle::random_elem(r, m);
                CHECK(apply_aut(a, u + v) == apply_aut(a, u) + apply_aut(a, v));
                CHECK(apply_aut(a, u * v) == apply_aut(a, u) * apply_aut(a, v));
            }
        }
    }
}

TEST_CASE("galois_group") {
    CHECK(galois_group(5).elements == std::vector<long>{1, 2, 3, 4});
    CHECK(galois_group(12).elements == std::vector<long>{1, 5, 7, 11});
    CHECK(galois_group(9).elements == std::vector<long>{1, 2, 4, 5, 7, 8});
    CHECK(galois_group(9).order() == 6);
    try {
        galois_group(2);
        FAIL("expected DegenerateExtension");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateExtension);
    }
}

TEST_CASE("subgroup_lattice") {
    auto elements = [](long m) {
        std::vector<std::vector<long>> out;
        for (auto& h : subgroup_lattice(m)) out.push_back(h.elements);
        return out;
    };
    CHECK(elements(5) == std::vector<std::vector<long>>{{1}, {1, 4}});
    CHECK(elements(12) == std::vector<std::vector<long>>{{1}, {1, 5}, {1, 7}, {1, 11}});
    CHECK(elements(4) == std::vector<std::vector<long>>{{1}});

    for (long m = 3; m <= 40; ++m) {
        if (euler_phi(m) > 16) continue;
        auto brute = oracle::brute_force_subgroups(m);
        brute.erase(galois_group(m).elements);
        auto mine = elements(m);
        CHECK(std::set<std::vector<long>>(mine.begin(), mine.end()) == brute);
        CHECK(mine.size() == brute.size());
    }
}

TEST_CASE("relative trace and norm") {
    CHECK(rel_trace(zeta(5), full_group(5)) == CycElem::rational(5, -1));
    CHECK(rel_norm(zeta(3), full_group(3)) == CycElem::rational(3, 1));
    CHECK(rel_trace(zeta(5), SubgroupData{5, {1, 4}}) == zeta(5) + zeta(5, 4));

    std::mt19937_64 rng(9);
    for (long m : {7L, 9L, 12L, 15L, 16L}) {
        const auto lattice = subgroup_lattice(m);
        const auto g = full_group(m);
        for (const auto& h : lattice) {
            const CycElem x = oracle::random_elem(rng, m);
            const CycElem t = rel_trace(x, h), n = rel_norm(x, h);
            for (long a : h.elements) {
                CHECK(apply_aut(a, t) == t);
                CHECK(apply_aut(a, n) == n);
            }
            // transitivity through every intermediate subgroup
            for (const auto& mid : lattice) {
                if (!h.is_subgroup_of(mid)) continue;
                CHECK(rel_trace(rel_trace(x, h), g, h) == rel_trace(rel_trace(rel_trace(x, h), mid, h), g, mid));
                CHECK(rel_norm(rel_norm(x, h), g, h) == rel_norm(rel_norm(rel_norm(x, h), mid, h), g, mid));
            }
            CHECK(rel_trace(x, g) == rel_trace(rel_trace(x, h), g, h));
        }
    }
}

TEST_CASE("generates") {
    const auto g5 = full_group(5);
    const SubgroupData triv{5, {1}}, half{5, {1, 4}};
    CHECK(generates(zeta(5), triv, g5));
    CHECK_FALSE(generates(zeta(5) + zeta(5, 4), triv, g5));
    CHECK(generates(zeta(5) + zeta(5, 4), half, g5));
    try {
        generates(zeta(5), half, g5);
        FAIL("expected NotInField");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInField);
    }

    // stabilizer enumeration oracle: the set of a with x^a = x is exactly `half`
    std::vector<long> stab;
    for (long a : g5.elements)
        if (apply_aut(a, zeta(5) + zeta(5, 4)) == zeta(5) + zeta(5, 4)) stab.push_back(a);
    CHECK(stab == half.elements);

    std::mt19937_64 rng(3);
    for (long m : {8L, 12L, 13L}) {
        const auto g = full_group(m);
        for (const auto& h : subgroup_lattice(m)) {
            CHECK(generates(CycElem::rational(m, 7), h, h));
            const CycElem x = rel_trace(oracle::random_elem(rng, m), h);
            CHECK(generates(x, h, g) == generates(x + CycElem::rational(m, Rat(3, 2)), h, g));
        }
        CHECK_FALSE(generates(CycElem::rational(m, 1), trivial_subgroup(m), g));
    }
}

TEST_CASE("rel_discriminant") {
    const auto g5 = full_group(5);
    const CycElem sqrt5 = Rat(2) * (zeta(5) + zeta(5, 4)) + CycElem::rational(5, 1);
    CHECK(sqrt5 * sqrt5 == CycElem::rational(5, 5));
    CHECK(rel_discriminant(sqrt5, SubgroupData{5, {1, 4}}, g5) == 20);
    CHECK(rel_discriminant(zeta(5), trivial_subgroup(5), g5) == oracle::discriminant_by_resultant(cyclotomic_poly(5)));
    CHECK(rel_discriminant(zeta(5), trivial_subgroup(5), g5) == 125);
    CHECK(rel_discriminant(zeta(3), trivial_subgroup(3), full_group(3)) == 3);
    for (long m : {7L, 8L, 9L, 12L, 16L})
        CHECK(rel_discriminant(zeta(m), trivial_subgroup(m), full_group(m)) ==
              oracle::discriminant_by_resultant(cyclotomic_poly(m)));
    try {
        rel_discriminant(zeta(5) + zeta(5, 4), trivial_subgroup(5), g5);
        FAIL("expected NotAGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAGenerator);
    }
}

TEST_CASE("characteristic polynomial and integrality") {
    CHECK(characteristic_polynomial(zeta(5)) == rats({1, 1, 1, 1, 1}));
    CHECK(is_algebraic_integer(zeta(7) * Rat(3) + CycElem::rational(7, 2)));
    CHECK_FALSE(is_algebraic_integer(zeta(7) * Rat(1, 2)));
    CHECK(absolute_norm(CycElem::rational(3, 1) - zeta(3)) == 3);
}
