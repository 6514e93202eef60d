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

#include "cft/characters.hpp"

#include <string>

#include "cft/error.hpp"

namespace cft {

int FiniteAbelianGroup::inverse(int x) const {
    for (int y = 0; y < order(); ++y)
        if (mul(x, y) == 0) return y;
    fail(ErrorKind::VerificationFailed, "element without inverse");
}

int FiniteAbelianGroup::element_order(int x) const {
    int k = 1;
    for (int y = x; y != 0; y = mul(y, x)) ++k;
    return k;
}

namespace {

// Indices of the subgroup generated by gens.
std::vector<bool> span(const FiniteAbelianGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(static_cast<size_t>(g.order()), false);
    in[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : gens) {
                const int y = g.mul(x, s);
                if (!in[static_cast<size_t>(y)]) {
                    in[static_cast<size_t>(y)] = true;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return in;
}

// Extends generator exponents to the whole group; empty result if the
// assignment is not a homomorphism.
std::vector<int> extend(const FiniteAbelianGroup& g, const std::vector<int>& gens, const std::vector<int>& steps) {
    const int d = g.order();
    std::vector<int> value(static_cast<size_t>(d), -1);
    value[0] = 0;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (size_t i = 0; i < gens.size(); ++i) {
                const int y = g.mul(x, gens[i]);
                const int v = (value[static_cast<size_t>(x)] + steps[i]) % d;
                if (value[static_cast<size_t>(y)] < 0) {
                    value[static_cast<size_t>(y)] = v;
                    next.push_back(y);
                } else if (value[static_cast<size_t>(y)] != v) {
                    return {};
                }
            }
        frontier = std::move(next);
    }
    return value;
}

}  // namespace

CharacterTable character_table(const FiniteAbelianGroup& g) {
    const int d = g.order();
    if (d < 1 || g.mul(0, 0) != 0) fail(ErrorKind::InvalidArgument, "group table must start with the identity");
    CharacterTable t;
    t.order = d;
    std::vector<bool> covered = span(g, {});
    for (int x = 1; x < d; ++x) {
        if (covered[static_cast<size_t>(x)]) continue;
        t.generators.push_back(x);
        covered = span(g, t.generators);
    }
    std::vector<int> orders;
    for (int s : t.generators) orders.push_back(g.element_order(s));

    // odometer over (c_1, ..., c_r), c_i < ord(g_i); chi(g_i) = zeta_ord^c_i
    std::vector<int> c(t.generators.size(), 0);
    for (bool done = false; !done;) {
        std::vector<int> steps(c.size());
        for (size_t i = 0; i < c.size(); ++i) steps[i] = c[i] * (d / orders[i]);
        if (auto v = extend(g, t.generators, steps); !v.empty()) t.values.push_back(std::move(v));
        done = true;
        for (size_t k = c.size(); k-- > 0;) {
            if (++c[k] < orders[k]) {
                done = false;
                break;
            }
            c[k] = 0;
        }
    }
    if (static_cast<int>(t.values.size()) != d)
        fail(ErrorKind::VerificationFailed,
             "found " + std::to_string(t.values.size()) + " characters for a group of order " + std::to_string(d));
    return t;
}

}  // namespace cft
