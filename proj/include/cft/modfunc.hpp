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

#ifndef CFT_MODFUNC_HPP
#define CFT_MODFUNC_HPP

#include <string>
#include <tuple>

#include "cft/bigfloat.hpp"

namespace cft {

struct EvalConfig {
    long digits = 128;      // precision of returned values
    long guard = 10;        // extra working digits
    long max_terms = 20000; // truncation budget for q-series and q-products
};

/// Classical: q^(1/24) prod (1 - q^n).  Scaled: the same times
/// sqrt(2 pi) zeta_8, the normalisation under which the wp difference
/// identity in check_ptog holds exactly.
enum class EtaNorm { Scaled, Classical };
std::string to_string(EtaNorm n);

class TauPoint {
public:
    explicit TauPoint(BigComplex tau);
    const BigComplex& tau() const { return tau_; }

private:
    BigComplex tau_;
};

/// [r; s] = [a/N; b/N] with 0 <= a, b < N and (a, b) != (0, 0).
struct FracIndex {
    long a = 0, b = 1, N = 1;

    static FracIndex make(long a, long b, long N);
    FracIndex negated() const { return make(-a, -b, N); }
    FracIndex lifted(long M) const;
    Rat r() const { return Rat(a, N); }
    Rat s() const { return Rat(b, N); }
    friend bool operator==(const FracIndex&, const FracIndex&) = default;
    friend bool operator<(const FracIndex& x, const FracIndex& y) {
        return std::tie(x.N, x.a, x.b) < std::tie(y.N, y.a, y.b);
    }
};

/// idx1 = +-idx2 mod Z^2, after lifting to a common level.
bool same_up_to_sign(const FracIndex& x, const FracIndex& y);

BigComplex eta(const TauPoint& tau, EtaNorm norm, const EvalConfig& cfg = {});

BigComplex siegel_g(const FracIndex& idx, const TauPoint& tau, const EvalConfig& cfg = {});
/// The defining product evaluated at the literal representative (r, s).
BigComplex siegel_g_rep(const Rat& r, const Rat& s, const TauPoint& tau, const EvalConfig& cfg = {});

struct EisensteinValues {
    BigComplex g2, g3, delta, j;
};

EisensteinValues eisenstein(const TauPoint& tau, const EvalConfig& cfg = {});

BigComplex wp_value(const FracIndex& idx, const TauPoint& tau, const EvalConfig& cfg = {});

BigComplex fricke_f(const FracIndex& idx, const TauPoint& tau, const EvalConfig& cfg = {});
/// Same value reusing precomputed Eisenstein data at tau.
BigComplex fricke_f(const FracIndex& idx, const TauPoint& tau, const EisensteinValues& e, const EvalConfig& cfg);

struct FmValue {
    BigComplex ratio;    // p^{2(m+1)} (f_{[0;1/p^m]} - f_{[1/p;0]}) / (f_{[0;1/p]} - f_{[1/p;0]})
    BigComplex product;  // the same value as a Siegel-function product
    BigFloat residual;   // |ratio - product| / max(1, |ratio|)
};

/// Throws DenominatorVanishes, and VerificationFailed when the two forms
/// disagree beyond 10^-(digits-12).
FmValue fm_func(long p, long m, const TauPoint& tau, const EvalConfig& cfg = {});

struct PtogResult {
    BigComplex lhs, rhs;
    BigFloat residual;  // |lhs - rhs|
};

/// wp_1 - wp_2 against -g_{1+2} g_{1-2} eta^4 / (g_1^2 g_2^2).
PtogResult check_ptog(const FracIndex& idx1, const FracIndex& idx2, const TauPoint& tau, EtaNorm norm,
                      const EvalConfig& cfg = {});

}  // namespace cft

#endif  // CFT_MODFUNC_HPP
