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

#include <complex>
#include <numbers>
#include <numeric>
#include <set>

#include "cft/characters.hpp"

using namespace cft;

namespace {

// Z/n1 x Z/n2 x ... with elements in mixed-radix order.
FiniteAbelianGroup product_group(const std::vector<int>& n) {
    int d = 1;
    for (int x : n) d *= x;
    FiniteAbelianGroup g;
    g.table.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d)));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            int ra = a, rb = b, out = 0, radix = 1;
            for (int x : n) {
                out += ((ra % x + rb % x) % x) * radix;
                radix *= x;
                ra /= x;
                rb /= x;
            }
            g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = out;
        }
    return g;
}

FiniteAbelianGroup unit_group(long m, std::vector<long>& units) {
    units.clear();
    for (long a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) units.push_back(a);
    FiniteAbelianGroup g;
    g.table.assign(units.size(), std::vector<int>(units.size()));
    for (size_t i = 0; i < units.size(); ++i)
        for (size_t j = 0; j < units.size(); ++j) {
            const long p = units[i] * units[j] % m;
            g.table[i][j] = static_cast<int>(std::find(units.begin(), units.end(), p) - units.begin());
        }
    return g;
}

void check_table(const FiniteAbelianGroup& g) {
    const auto t = character_table(g);
    const int d = g.order();
    REQUIRE(t.order == d);
    REQUIRE(t.values.size() == static_cast<size_t>(d));
    for (int v : t.values[0]) CHECK(v == 0);
    std::set<std::vector<int>> distinct(t.values.begin(), t.values.end());
    CHECK(distinct.size() == static_cast<size_t>(d));
    for (const auto& chi : t.values)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                CHECK((chi[static_cast<size_t>(a)] + chi[static_cast<size_t>(b)]) % d ==
                      chi[static_cast<size_t>(g.mul(a, b))]);
    // orthogonality as integer exponent sums: sum_g zeta^(e_i - e_j) = d delta_ij
    const long double pi = std::numbers::pi_v<long double>;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::complex<long double> s = 0;
            for (int k = 0; k < d; ++k) {
                const int e = t.values[static_cast<size_t>(i)][static_cast<size_t>(k)] -
                              t.values[static_cast<size_t>(j)][static_cast<size_t>(k)];
                s += std::polar(1.0L, 2 * pi * e / d);
            }
            CHECK(std::abs(s - std::complex<long double>(i == j ? d : 0, 0)) < 1e-12L);
        }
}

}  // namespace

TEST_CASE("character tables of small abelian groups") {
    for (const auto& n : std::vector<std::vector<int>>{{1}, {2}, {5}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 6}}) {
        CAPTURE(n.size());
        check_table(product_group(n));
    }
}

TEST_CASE("character tables of unit groups") {
    std::vector<long> units;
    for (long m : {3L, 4L, 5L, 7L, 8L, 12L, 15L, 16L, 21L, 24L}) {
        CAPTURE(m);
        check_table(unit_group(m, units));
    }
}

TEST_CASE("unit group character values") {
    std::vector<long> units;
    auto t3 = character_table(unit_group(3, units));
    CHECK(t3.values[1][1] == 1);  // chi(2) = zeta_2 = -1

    auto t5 = character_table(unit_group(5, units));
    // some character sends 2 to i = zeta_4
    bool found = false;
    for (const auto& chi : t5.values) found = found || chi[1] == 1;
    CHECK(found);

    auto t8 = character_table(unit_group(8, units));
    for (const auto& chi : t8.values)
        for (int e : chi) CHECK((e == 0 || e == 2));  // values +-1 in exponent form mod 4
}
