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

#ifndef CFT_CYCLOTOMIC_HPP
#define CFT_CYCLOTOMIC_HPP

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(zeta_m) and its Galois theory.
 *
 * An element of Q(zeta_m) is stored by its rational coordinates in the power
 * basis 1, zeta_m, ..., zeta_m^(phi(m)-1).  Galois automorphisms are indexed by
 * units a mod m (zeta_m -> zeta_m^a), and subfields are never represented
 * directly: a subfield is the fixed field of a subgroup H of (Z/mZ)^x and
 * membership means "fixed by every a in H".
 *
 * Mixed-conductor arithmetic lifts both operands into Q(zeta_lcm).
 */

#include <map>
#include <vector>

#include "cft/arith.hpp"

namespace cft {

/// Coefficients (low degree first) of the m-th cyclotomic polynomial.  Built
/// once per m from X^m - 1 divided by Phi_d for the proper divisors d; the
/// cache is guarded and entries are never modified after insertion.
const std::vector<Int>& cyclotomic_poly(long m);

class CycElem {
  public:
    /// Zero of Q(zeta_m).
    explicit CycElem(long m = 1);
    /// Takes coordinates as-is; the length must be phi(m).
    CycElem(long m, std::vector<Rat> coeffs);

    static CycElem rational(long m, const Rat& value);
    static CycElem zeta(long m, long k = 1);

    long conductor() const noexcept { return m_; }
    long degree() const noexcept { return static_cast<long>(c_.size()); }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coordinate; the value itself when is_rational().
    const Rat& constant() const { return c_.front(); }

    /// Same element written in Q(zeta_M); requires m | M.
    CycElem lift(long M) const;

    CycElem inverse() const;
    CycElem pow(long n) const;

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& y);
    CycElem& operator-=(const CycElem& y);
    CycElem& operator*=(const CycElem& y);
    CycElem& operator/=(const CycElem& y);
    CycElem& operator*=(const Rat& r);

    friend CycElem operator+(CycElem x, const CycElem& y) { return x += y; }
    friend CycElem operator-(CycElem x, const CycElem& y) { return x -= y; }
    friend CycElem operator*(CycElem x, const CycElem& y) { return x *= y; }
    friend CycElem operator/(CycElem x, const CycElem& y) { return x /= y; }
    friend CycElem operator*(CycElem x, const Rat& r) { return x *= r; }
    friend CycElem operator*(const Rat& r, CycElem x) { return x *= r; }
    friend bool operator==(const CycElem& x, const CycElem& y);

  private:
    long m_;
    std::vector<Rat> c_;
};

/// Canonical representative of sum raw[k] * zeta_m^k; k may be any integer.
CycElem cyc_reduce(long m, const std::map<long, Rat>& raw);

enum class ArithOp { add, sub, mul, div };
CycElem cyc_arith(const CycElem& x, const CycElem& y, ArithOp op);

/// zeta_m -> zeta_m^a.
struct GaloisAut {
    long m;
    long a;
    GaloisAut(long conductor, long exponent);
};

/// Image of x under sigma.  x is lifted when its conductor divides sigma's.
CycElem apply_aut(const GaloisAut& sigma, const CycElem& x);
CycElem apply_aut(long a, const CycElem& x);

/// (Z/mZ)^x with the identity first.
struct AbelianGroupData {
    long m;
    std::vector<long> elements;
    long order() const { return static_cast<long>(elements.size()); }
};

AbelianGroupData galois_group(long m);

/// Sorted element list of a subgroup of (Z/mZ)^x.
struct SubgroupData {
    long m;
    std::vector<long> elements;

    long size() const { return static_cast<long>(elements.size()); }
    bool contains(long a) const;
    bool is_subgroup_of(const SubgroupData& other) const;
    friend bool operator==(const SubgroupData&, const SubgroupData&) = default;
};

/// Subgroup generated by the listed units (empty list gives {1}).
SubgroupData subgroup_generated_by(long m, const std::vector<long>& generators);
SubgroupData full_group(long m);
SubgroupData trivial_subgroup(long m);

/// Every proper subgroup of (Z/mZ)^x ordered by size, then lexicographically.
std::vector<SubgroupData> subgroup_lattice(long m);

/// Representatives of H_high / H_low, the smallest element of each coset,
/// in ascending order (so 1 comes first).
std::vector<long> coset_representatives(const SubgroupData& high, const SubgroupData& low);

bool is_fixed_by(const CycElem& x, const SubgroupData& h);

CycElem rel_trace(const CycElem& x, const SubgroupData& h);
CycElem rel_norm(const CycElem& x, const SubgroupData& h);

/// Trace / norm from Fix(low) down to Fix(high); x must be fixed by low.
CycElem rel_trace(const CycElem& x, const SubgroupData& high, const SubgroupData& low);
CycElem rel_norm(const CycElem& x, const SubgroupData& high, const SubgroupData& low);

/// Norm from Q(zeta_m) to Q.
Rat absolute_norm(const CycElem& x);

/// True iff x generates Fix(low) over Fix(high).  Throws NotInField when x is
/// not fixed by low.
bool generates(const CycElem& x, const SubgroupData& low, const SubgroupData& high);

/// |N_{L/Q}(disc(x, F/L))| with F = Fix(low), L = Fix(high).
Rat rel_discriminant(const CycElem& x, const SubgroupData& low, const SubgroupData& high);

/// Monic characteristic polynomial of x over Q as an element of Q(zeta_m)
/// (product over all Galois conjugates), low degree first.
std::vector<Rat> characteristic_polynomial(const CycElem& x);
bool is_algebraic_integer(const CycElem& x);

}  // namespace cft

#endif  // CFT_CYCLOTOMIC_HPP
