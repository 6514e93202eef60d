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

#include "cft/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include "cft/error.hpp"

namespace cft {

namespace {

using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    // den is monic with integer coefficients
    const long dn = static_cast<long>(den.size()) - 1;
    const long nn = static_cast<long>(num.size()) - 1;
    std::vector<Int> q(static_cast<size_t>(nn - dn + 1));
    for (long k = nn; k >= dn; --k) {
        Int c = num[static_cast<size_t>(k)];
        q[static_cast<size_t>(k - dn)] = c;
        if (c == 0) continue;
        for (long i = 0; i <= dn; ++i) num[static_cast<size_t>(k - dn + i)] -= c * den[static_cast<size_t>(i)];
    }
    for (long i = 0; i < dn; ++i)
        if (num[static_cast<size_t>(i)] != 0) fail(ErrorKind::VerificationFailed, "cyclotomic division not exact");
    return q;
}

std::vector<Int> build_cyclotomic(long m) {
    std::vector<Int> p(static_cast<size_t>(m + 1));
    p[0] = -1;
    p[static_cast<size_t>(m)] = 1;
    for (long d : divisors(m))
        if (d < m) p = poly_div_exact(p, cyclotomic_poly(d));
    return p;
}

// Reduce a dense polynomial in zeta_m (any length) modulo Phi_m, in place.
std::vector<Rat> reduce_mod_phi(long m, std::vector<Rat> dense) {
    const auto& phi = cyclotomic_poly(m);
    const long n = static_cast<long>(phi.size()) - 1;
    for (long k = static_cast<long>(dense.size()) - 1; k >= n; --k) {
        const Rat c = dense[static_cast<size_t>(k)];
        if (c == 0) continue;
        for (long i = 0; i < n; ++i) {
            const Int& pi = phi[static_cast<size_t>(i)];
            if (pi != 0) dense[static_cast<size_t>(k - n + i)] -= c * pi;
        }
        dense[static_cast<size_t>(k)] = 0;
    }
    dense.resize(static_cast<size_t>(n));
    return dense;
}

void require_conductor(long m) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "conductor must be >= 1, got " + std::to_string(m));
}

QPoly phi_as_qpoly(long m) {
    const auto& phi = cyclotomic_poly(m);
    return QPoly(phi.begin(), phi.end());
}

// (quotient, remainder) of a / b over Q; b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    const long db = deg(b);
    if (deg(a) < db) return {QPoly{}, a};
    QPoly q(static_cast<size_t>(deg(a) - db + 1));
    const Rat lead = b.back();
    for (long k = deg(a); k >= db; --k) {
        const Rat c = a[static_cast<size_t>(k)] / lead;
        q[static_cast<size_t>(k - db)] = c;
        if (c == 0) continue;
        for (long i = 0; i <= db; ++i) a[static_cast<size_t>(k - db + i)] -= c * b[static_cast<size_t>(i)];
    }
    a.resize(static_cast<size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long m) {
    require_conductor(m);
    static std::mutex mutex;
    static std::map<long, std::vector<Int>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    // Built outside the lock: the recursion re-enters for proper divisors.
    std::vector<Int> p = m == 1 ? std::vector<Int>{-1, 1} : build_cyclotomic(m);
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// CycElem

CycElem::CycElem(long m) : m_(m) {
    require_conductor(m);
    c_.assign(static_cast<size_t>(euler_phi(m)), Rat(0));
}

CycElem::CycElem(long m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
    require_conductor(m);
    if (static_cast<long>(c_.size()) != euler_phi(m))
        fail(ErrorKind::InvalidArgument, "coordinate vector of length " + std::to_string(c_.size()) +
                                             " for conductor " + std::to_string(m));
    for (auto& c : c_) c.canonicalize();
}

CycElem CycElem::rational(long m, const Rat& value) {
    CycElem x(m);
    x.c_[0] = value;
    return x;
}

CycElem CycElem::zeta(long m, long k) { return cyc_reduce(m, {{k, Rat(1)}}); }

bool CycElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c == 0; });
}

bool CycElem::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& c) { return c == 0; });
}

CycElem CycElem::lift(long M) const {
    require_conductor(M);
    if (M % m_ != 0)
        fail(ErrorKind::InvalidArgument,
             "cannot lift conductor " + std::to_string(m_) + " to " + std::to_string(M));
    if (M == m_) return *this;
    const long step = M / m_;
    std::vector<Rat> dense(static_cast<size_t>(M));
    for (size_t k = 0; k < c_.size(); ++k) dense[k * static_cast<size_t>(step)] = c_[k];
    return CycElem(M, reduce_mod_phi(M, std::move(dense)));
}

CycElem CycElem::operator-() const {
    CycElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycElem& CycElem::operator+=(const CycElem& y) {
    if (y.m_ != m_) {
        const long M = lcm_long(m_, y.m_);
        *this = lift(M);
        return *this += y.lift(M);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& y) { return *this += -y; }

CycElem& CycElem::operator*=(const CycElem& y) {
    if (y.m_ != m_) {
        const long M = lcm_long(m_, y.m_);
        *this = lift(M);
        return *this *= y.lift(M);
    }
    std::vector<Rat> prod(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j)
            if (y.c_[j] != 0) prod[i + j] += c_[i] * y.c_[j];
    }
    c_ = reduce_mod_phi(m_, std::move(prod));
    return *this;
}

CycElem& CycElem::operator*=(const Rat& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycElem& CycElem::operator/=(const CycElem& y) { return *this *= y.inverse(); }

CycElem CycElem::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
    if (is_rational()) return rational(m_, 1 / c_[0]);
    // Extended Euclid against Phi_m: s * x = 1 mod Phi_m.
    QPoly r0 = phi_as_qpoly(m_), r1 = c_;
    trim(r1);
    QPoly s0{}, s1{Rat(1)};
    while (deg(r1) > 0) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty()) fail(ErrorKind::VerificationFailed, "element shares a factor with Phi_m");
    }
    const Rat inv_c = 1 / r1[0];
    for (auto& c : s1) c *= inv_c;
    return CycElem(m_, reduce_mod_phi(m_, std::move(s1)));
}

CycElem CycElem::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    CycElem result = rational(m_, 1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

bool operator==(const CycElem& x, const CycElem& y) {
    if (x.m_ == y.m_) return x.c_ == y.c_;
    const long M = lcm_long(x.m_, y.m_);
    return x.lift(M).c_ == y.lift(M).c_;
}

CycElem cyc_reduce(long m, const std::map<long, Rat>& raw) {
    if (m == 0) fail(ErrorKind::InvalidArgument, "conductor 0");
    require_conductor(m);
    std::vector<Rat> dense(static_cast<size_t>(m));
    for (const auto& [k, c] : raw) dense[static_cast<size_t>(mod_floor(k, m))] += c;
    return CycElem(m, reduce_mod_phi(m, std::move(dense)));
}

CycElem cyc_arith(const CycElem& x, const CycElem& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    fail(ErrorKind::InvalidArgument, "unknown arithmetic op");
}

// ---------------------------------------------------------------------------
// Galois group

GaloisAut::GaloisAut(long conductor, long exponent) : m(conductor), a(0) {
    require_conductor(conductor);
    a = mod_floor(exponent, conductor);
    if (gcd_long(a, m) != 1 && m > 1)
        fail(ErrorKind::InvalidArgument,
             "exponent " + std::to_string(exponent) + " is not a unit mod " + std::to_string(m));
}

CycElem apply_aut(const GaloisAut& sigma, const CycElem& x_in) {
    if (sigma.m % x_in.conductor() != 0)
        fail(ErrorKind::InvalidArgument, "automorphism of conductor " + std::to_string(sigma.m) +
                                             " applied to element of conductor " +
                                             std::to_string(x_in.conductor()));
    const CycElem x = x_in.lift(sigma.m);
    const long m = sigma.m;
    if (sigma.a == 1 % m) return x;
    std::vector<Rat> dense(static_cast<size_t>(m));
    const auto& c = x.coeffs();
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) dense[static_cast<size_t>((sigma.a * static_cast<long>(k)) % m)] += c[k];
    return CycElem(m, reduce_mod_phi(m, std::move(dense)));
}

CycElem apply_aut(long a, const CycElem& x) { return apply_aut(GaloisAut(x.conductor(), a), x); }

AbelianGroupData galois_group(long m) {
    if (m < 3)
        fail(ErrorKind::DegenerateExtension,
             "conductor " + std::to_string(m) + " gives the trivial extension Q(zeta_m) = Q");
    AbelianGroupData g{m, {}};
    for (long a = 1; a < m; ++a)
        if (gcd_long(a, m) == 1) g.elements.push_back(a);
    return g;
}

bool SubgroupData::contains(long a) const {
    return std::binary_search(elements.begin(), elements.end(), mod_floor(a, m));
}

bool SubgroupData::is_subgroup_of(const SubgroupData& other) const {
    return m == other.m && std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                                         elements.end());
}

SubgroupData subgroup_generated_by(long m, const std::vector<long>& generators) {
    require_conductor(m);
    std::set<long> h{1 % m};
    std::vector<long> frontier{1 % m};
    std::vector<long> gens;
    for (long g : generators) {
        const long a = mod_floor(g, m);
        if (gcd_long(a, m) != 1)
            fail(ErrorKind::InvalidArgument, std::to_string(g) + " is not a unit mod " + std::to_string(m));
        gens.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long x : frontier)
            for (long g : gens) {
                const long y = (x * g) % m;
                if (h.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return SubgroupData{m, std::vector<long>(h.begin(), h.end())};
}

SubgroupData full_group(long m) {
    const auto g = galois_group(m);
    return SubgroupData{m, g.elements};
}

SubgroupData trivial_subgroup(long m) { return SubgroupData{m, {1 % m}}; }

std::vector<SubgroupData> subgroup_lattice(long m) {
    const auto g = galois_group(m);
    std::set<std::vector<long>> seen{{1}};
    std::vector<std::vector<long>> queue{{1}};
    // Every subgroup is reached by adjoining one element at a time.
    for (size_t i = 0; i < queue.size(); ++i) {
        for (long a : g.elements) {
            std::vector<long> gens = queue[i];
            gens.push_back(a);
            auto h = subgroup_generated_by(m, gens).elements;
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    }
    std::vector<SubgroupData> out;
    for (auto& h : seen)
        if (static_cast<long>(h.size()) < g.order()) out.push_back(SubgroupData{m, h});
    std::sort(out.begin(), out.end(), [](const SubgroupData& x, const SubgroupData& y) {
        if (x.elements.size() != y.elements.size()) return x.elements.size() < y.elements.size();
        return x.elements < y.elements;
    });
    return out;
}

std::vector<long> coset_representatives(const SubgroupData& high, const SubgroupData& low) {
    if (!low.is_subgroup_of(high)) fail(ErrorKind::InvalidArgument, "low subgroup is not contained in high");
    std::set<long> covered;
    std::vector<long> reps;
    for (long a : high.elements) {
        if (covered.count(a)) continue;
        reps.push_back(a);
        for (long h : low.elements) covered.insert((a * h) % high.m);
    }
    return reps;
}

bool is_fixed_by(const CycElem& x, const SubgroupData& h) {
    for (long a : h.elements)
        if (a != 1 && !(apply_aut(GaloisAut(h.m, a), x) == x)) return false;
    return true;
}

namespace {

void require_same_field(const CycElem& x, const SubgroupData& h) {
    if (h.m % x.conductor() != 0)
        fail(ErrorKind::InvalidArgument, "subgroup of conductor " + std::to_string(h.m) +
                                             " does not act on conductor " + std::to_string(x.conductor()));
}

}  // namespace

CycElem rel_trace(const CycElem& x, const SubgroupData& h) {
    require_same_field(x, h);
    CycElem sum(h.m);
    for (long a : h.elements) sum += apply_aut(GaloisAut(h.m, a), x);
    return sum;
}

CycElem rel_norm(const CycElem& x, const SubgroupData& h) {
    require_same_field(x, h);
    CycElem prod = CycElem::rational(h.m, 1);
    for (long a : h.elements) prod *= apply_aut(GaloisAut(h.m, a), x);
    return prod;
}

CycElem rel_trace(const CycElem& x, const SubgroupData& high, const SubgroupData& low) {
    require_same_field(x, high);
    if (!is_fixed_by(x, low)) fail(ErrorKind::NotInField, "trace argument is not fixed by the lower subgroup");
    CycElem sum(high.m);
    for (long a : coset_representatives(high, low)) sum += apply_aut(GaloisAut(high.m, a), x);
    return sum;
}

CycElem rel_norm(const CycElem& x, const SubgroupData& high, const SubgroupData& low) {
    require_same_field(x, high);
    if (!is_fixed_by(x, low)) fail(ErrorKind::NotInField, "norm argument is not fixed by the lower subgroup");
    CycElem prod = CycElem::rational(high.m, 1);
    for (long a : coset_representatives(high, low)) prod *= apply_aut(GaloisAut(high.m, a), x);
    return prod;
}

Rat absolute_norm(const CycElem& x) {
    if (x.conductor() < 3) return x.constant();
    const CycElem n = rel_norm(x, full_group(x.conductor()));
    if (!n.is_rational()) fail(ErrorKind::VerificationFailed, "absolute norm is not rational");
    return n.constant();
}

bool generates(const CycElem& x, const SubgroupData& low, const SubgroupData& high) {
    if (!low.is_subgroup_of(high)) fail(ErrorKind::InvalidArgument, "low subgroup is not contained in high");
    require_same_field(x, high);
    if (!is_fixed_by(x, low)) fail(ErrorKind::NotInField, "element is not fixed by the lower subgroup");
    for (long a : high.elements) {
        if (low.contains(a)) continue;
        if (apply_aut(GaloisAut(high.m, a), x) == x) return false;
    }
    return true;
}

Rat rel_discriminant(const CycElem& x, const SubgroupData& low, const SubgroupData& high) {
    if (!generates(x, low, high))
        fail(ErrorKind::NotAGenerator, "element does not generate Fix(low) over Fix(high)");
    const long m = high.m;
    std::vector<CycElem> conj;
    for (long a : coset_representatives(high, low)) conj.push_back(apply_aut(GaloisAut(m, a), x));
    CycElem disc = CycElem::rational(m, 1);
    for (size_t i = 0; i < conj.size(); ++i)
        for (size_t j = i + 1; j < conj.size(); ++j) {
            const CycElem d = conj[i] - conj[j];
            disc *= d * d;
        }
    if (!is_fixed_by(disc, high)) fail(ErrorKind::VerificationFailed, "discriminant escaped the base field");
    const CycElem n = m < 3 ? disc : rel_norm(disc, full_group(m), high);
    if (!n.is_rational()) fail(ErrorKind::VerificationFailed, "norm of discriminant is not rational");
    return abs(n.constant());
}

std::vector<Rat> characteristic_polynomial(const CycElem& x) {
    const long m = x.conductor();
    if (m < 3) return {-x.constant(), Rat(1)};
    // coefficients low degree first, starting from the constant polynomial 1
    std::vector<CycElem> poly{CycElem::rational(m, 1)};
    for (long a : galois_group(m).elements) {
        const CycElem root = apply_aut(GaloisAut(m, a), x);
        std::vector<CycElem> next(poly.size() + 1, CycElem(m));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * root;
        }
        poly = std::move(next);
    }
    std::vector<Rat> out;
    for (const auto& c : poly) {
        if (!c.is_rational()) fail(ErrorKind::VerificationFailed, "characteristic polynomial is not rational");
        out.push_back(c.constant());
    }
    return out;
}

bool is_algebraic_integer(const CycElem& x) {
    for (const auto& c : characteristic_polynomial(x))
        if (c.get_den() != 1) return false;
    return true;
}

}  // namespace cft
