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

#include "cft/normal_elem.hpp"

#include <algorithm>

#include "cft/coprime_seq.hpp"
#include "cft/error.hpp"

namespace cft {

namespace {

FiniteAbelianGroup unit_group_table(long m, const std::vector<long>& units) {
    FiniteAbelianGroup g;
    const size_t n = units.size();
    g.table.assign(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const long p = units[i] * units[j] % m;
            g.table[i][j] = static_cast<int>(std::lower_bound(units.begin(), units.end(), p) - units.begin());
        }
    return g;
}

CycElem lifted(const CycElem& x, long field) { return x.conductor() == field ? x : x.lift(field); }

// sum_k chi(g_k^{-1}) c_k
CycElem twisted_sum(const AbelianCharTable& t, size_t i, const std::vector<CycElem>& conj) {
    CycElem s(t.field);
    for (size_t k = 0; k < t.size(); ++k) s += t.value_inv(i, k) * conj[k];
    return s;
}

std::vector<CycElem> conjugates_in(const CycElem& u, const AbelianCharTable& t) {
    std::vector<CycElem> out;
    for (long a : t.elements) out.push_back(lifted(apply_aut(a, u), t.field));
    return out;
}

}  // namespace

CycElem AbelianCharTable::value(size_t i, size_t k) const {
    const long e = exponents.values[i][k];
    return CycElem::zeta(field, e * (field / d));
}

CycElem AbelianCharTable::value_inv(size_t i, size_t k) const {
    const long e = exponents.values[i][k];
    return CycElem::zeta(field, mod_floor(-e * (field / d), field));
}

AbelianCharTable char_table(long m) {
    if (m < 3) fail(ErrorKind::DegenerateExtension, "conductor " + std::to_string(m) + " has trivial Galois group");
    AbelianCharTable t;
    t.m = m;
    t.elements = full_group(m).elements;
    t.d = static_cast<long>(t.elements.size());
    t.field = lcm_long(m, t.d);
    t.exponents = character_table(unit_group_table(m, t.elements));
    return t;
}

CycElem char_sum_S(const CycElem& alpha, const AbelianCharTable& table, size_t i, long t) {
    if (alpha.conductor() != table.m) fail(ErrorKind::LevelMismatch, "alpha is not in Q(zeta_m)");
    if (t < 0 || t >= table.d) fail(ErrorKind::InvalidArgument, "exponent out of range");
    std::vector<CycElem> conj;
    for (long a : table.elements) conj.push_back(lifted(apply_aut(a, alpha).pow(t), table.field));
    return twisted_sum(table, i, conj);
}

std::vector<long> first_nonvanishing_powers(const CycElem& alpha, const AbelianCharTable& table) {
    if (!generates(alpha, trivial_subgroup(table.m), full_group(table.m)))
        fail(ErrorKind::NotAGenerator, "alpha does not generate Q(zeta_m)");
    std::vector<long> first(table.size(), -1);
    for (size_t i = 0; i < table.size(); ++i) {
        for (long t = 0; t < table.d && first[i] < 0; ++t)
            if (!char_sum_S(alpha, table, i, t).is_zero()) first[i] = t;
        if (first[i] < 0) fail(ErrorKind::VerificationFailed, "character " + std::to_string(i) + " kills every power");
    }
    return first;
}

bool is_normal(const CycElem& u) {
    const auto t = char_table(u.conductor());
    const auto conj = conjugates_in(u, t);
    for (size_t i = 0; i < t.size(); ++i)
        if (twisted_sum(t, i, conj).is_zero()) return false;
    return true;
}

bool is_normal_by_rank(const CycElem& u) {
    const long m = u.conductor();
    const auto g = full_group(m);
    std::vector<std::vector<Rat>> a;
    for (long k : g.elements) a.push_back(apply_aut(k, u).coeffs());
    size_t r = 0;
    const size_t n = a.size();
    for (size_t col = 0; col < n && r < n; ++col) {
        size_t piv = r;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rat f = a[i][col] / a[r][col];
            for (size_t c = col; c < n; ++c) a[i][c] -= f * a[r][c];
        }
        ++r;
    }
    return r == n;
}

NormalElemCertificate build_normal_element(const CycElem& alpha, long size_guard_digits) {
    NormalElemCertificate c;
    c.m = alpha.conductor();
    c.alpha = alpha;
    c.table = char_table(c.m);
    if (!is_algebraic_integer(alpha)) fail(ErrorKind::NotAlgebraicInteger, "alpha");
    c.first_nonvanishing = first_nonvanishing_powers(alpha, c.table);

    const auto conj = full_group(c.m).elements;
    c.conjugates_distinct = true;
    for (size_t i = 0; i < conj.size(); ++i)
        for (size_t j = i + 1; j < conj.size(); ++j)
            if (apply_aut(conj[i], alpha) == apply_aut(conj[j], alpha)) c.conjugates_distinct = false;

    const long d = c.table.d;
    for (long t = 0; t < d; ++t)
        for (size_t i = 0; i < c.table.size(); ++i) {
            CycElem s = char_sum_S(alpha, c.table, i, t);
            if (!is_algebraic_integer(s))
                fail(ErrorKind::VerificationFailed, "character sum is not an algebraic integer");
            const Rat n = abs(absolute_norm(s));
            if (n.get_den() != 1) fail(ErrorKind::VerificationFailed, "non-integral norm");
            c.norms.push_back(n.get_num());
            c.sums.push_back(std::move(s));
        }
    c.denominators = coprime_seq(c.norms).outputs;
    for (size_t k = 0; k < c.denominators.size(); ++k)
        if (static_cast<long>(mpz_sizeinbase(c.denominators[k].get_mpz_t(), 10)) > size_guard_digits)
            c.warnings.push_back("M[" + std::to_string(k) + "] exceeds " + std::to_string(size_guard_digits) +
                                 " digits");

    c.beta = CycElem(c.m);
    CycElem power = CycElem::rational(c.m, 1);
    for (long t = 0; t < d; ++t) {
        Rat coef = 0;
        for (long i = 0; i < d; ++i) coef += Rat(Int(1), c.denominators[static_cast<size_t>(t * d + i)]);
        c.beta += power * coef;
        power *= alpha;
    }
    c.normal = is_normal(c.beta);
    c.normal_by_rank = is_normal_by_rank(c.beta);
    if (!c.all_passed()) fail(ErrorKind::VerificationFailed, "beta is not a normal element");
    return c;
}

}  // namespace cft
