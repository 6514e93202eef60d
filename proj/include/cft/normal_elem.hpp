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

#ifndef CFT_NORMAL_ELEM_HPP
#define CFT_NORMAL_ELEM_HPP

#include <string>
#include <vector>

#include "cft/characters.hpp"
#include "cft/cyclotomic.hpp"

namespace cft {

/// Characters of (Z/m)^x with values in Q(zeta_d) inside Q(zeta_L),
/// L = lcm(m, d).  elements[k] = g_k in ascending order, g_0 = 1.
struct AbelianCharTable {
    long m = 0;
    long d = 0;
    long field = 0;  // L
    std::vector<long> elements;
    CharacterTable exponents;

    size_t size() const { return elements.size(); }
    /// chi_i(g_k) in Q(zeta_L)
    CycElem value(size_t i, size_t k) const;
    /// chi_i(g_k^{-1})
    CycElem value_inv(size_t i, size_t k) const;
};

AbelianCharTable char_table(long m);

/// S(chi_i, t) = sum_k chi_i(g_k^{-1}) (alpha^{g_k})^t in Q(zeta_L).
CycElem char_sum_S(const CycElem& alpha, const AbelianCharTable& table, size_t i, long t);

/// For every character the smallest t in [0, d) with S(chi, t) != 0.
std::vector<long> first_nonvanishing_powers(const CycElem& alpha, const AbelianCharTable& table);

/// Character criterion: sum_k chi(g_k^{-1}) u^{g_k} != 0 for every chi.
bool is_normal(const CycElem& u);
/// Direct definition: the d conjugates of u are Q-linearly independent.
bool is_normal_by_rank(const CycElem& u);

struct NormalElemCertificate {
    long m = 0;
    CycElem alpha;
    AbelianCharTable table;
    std::vector<CycElem> sums;     // row-major: index t*d + i
    std::vector<Int> norms;        // N(chi_i, t)
    std::vector<Int> denominators; // M(chi_i, t)
    std::vector<long> first_nonvanishing;
    bool conjugates_distinct = false;
    CycElem beta;
    bool normal = false;
    bool normal_by_rank = false;
    std::vector<std::string> warnings;

    bool all_passed() const { return conjugates_distinct && normal && normal_by_rank; }
};

/// Builds beta = sum_t (sum_i 1/M(chi_i, t)) alpha^t and checks it is
/// normal.  A warning is recorded when some M exceeds size_guard_digits.
NormalElemCertificate build_normal_element(const CycElem& alpha, long size_guard_digits = 5000);

}  // namespace cft

#endif  // CFT_NORMAL_ELEM_HPP
