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

#ifndef CFT_CM_HPP
#define CFT_CM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cft/characters.hpp"
#include "cft/modfunc.hpp"

namespace cft {

/// K = Q(sqrt d_K) of class number one, d_K not -3 or -4.
struct ImagQuadData {
    long dk = 0;
    long B = 0, C = 0;  // min(theta_K) = x^2 + Bx + C
    long class_number = 1;

    /// theta_K = (d_K + sqrt d_K) / 2
    TauPoint theta(long digits) const;
};

const std::vector<long>& supported_discriminants();
ImagQuadData imag_quad(long dk);

/// [[u - Bv, -Cv], [v, u]] mod N.
struct WMatrix {
    long N = 1, u = 1, v = 0;
    long B = 0, C = 0;

    long a() const { return mod_floor(u - B * v, N); }
    long b() const { return mod_floor(-C * v, N); }
    long c() const { return mod_floor(v, N); }
    long d() const { return mod_floor(u, N); }
    long det() const;
    WMatrix reduced(long M) const;
    WMatrix negated() const { return {N, mod_floor(-u, N), mod_floor(-v, N), B, C}; }
    bool is_pm_identity() const;
    friend bool operator==(const WMatrix& x, const WMatrix& y) { return x.N == y.N && x.u == y.u && x.v == y.v; }
};

/// W_{K,N} and its quotient by {+-I}.  reps[0] is the identity; the other
/// classes follow in ascending order of their representative, which is the
/// lexicographically smaller of (u, v) and (-u, -v).
class WGroup {
public:
    WGroup(const ImagQuadData& K, long N);

    const ImagQuadData& field() const { return K_; }
    long level() const { return N_; }
    long order() const { return static_cast<long>(elements_.size()); }
    long quotient_order() const { return static_cast<long>(reps_.size()); }
    const std::vector<WMatrix>& elements() const { return elements_; }
    const std::vector<WMatrix>& reps() const { return reps_; }

    /// Index in reps() of the class of g (level N, or a multiple of N).
    size_t rep_index(const WMatrix& g) const;
    WMatrix mul(const WMatrix& x, const WMatrix& y) const;
    FiniteAbelianGroup quotient_group() const;
    /// Classes of reps() grouped by their image in W_{K,M}/+-I, M | N.
    /// Entry k lists the reps mapping to class k of WGroup(K, M).
    std::vector<std::vector<size_t>> fibers(const WGroup& lower) const;

private:
    ImagQuadData K_;
    long N_;
    std::vector<WMatrix> elements_, reps_;
    std::vector<long> index_;  // u*N + v -> rep index
};

WGroup enumerate_W(const ImagQuadData& K, long N);
long ray_degree(const ImagQuadData& K, long N);

/// Transpose of g applied to [r; s], canonical mod Z^2.
FracIndex act_on_index(const WMatrix& g, const FracIndex& idx);

class AtomCache;

/// Modular functions of level N built from g^{12M}_{[a/M;b/M]}, Fricke
/// f_{[a/M;b/M]}, j and rational constants.
class ModExpr {
public:
    enum class Kind { Const, Siegel12N, Fricke, J, Add, Sub, Mul, Div, Pow };

    static ModExpr constant(const Rat& c);
    static ModExpr siegel12n(const FracIndex& idx);
    static ModExpr fricke(const FracIndex& idx);
    static ModExpr j();
    /// p^{2(m+1)} (f_{[0;1/p^m]} - f_{[1/p;0]}) / (f_{[0;1/p]} - f_{[1/p;0]})
    static ModExpr fm(long p, long m);
    /// expr := term (+|- term)*, term := factor (*|/ factor)*,
    /// factor := unary (^ int)?, atoms g12N(a,b,N), fricke(a,b,N), j,
    /// fm(p,m), integers, parentheses.
    static ModExpr parse(const std::string& text);

    Kind kind() const;
    long level() const;
    ModExpr act(const WMatrix& g) const;
    BigComplex eval(AtomCache& cache) const;
    std::string str() const;

    friend ModExpr operator+(const ModExpr& x, const ModExpr& y);
    friend ModExpr operator-(const ModExpr& x, const ModExpr& y);
    friend ModExpr operator*(const ModExpr& x, const ModExpr& y);
    friend ModExpr operator/(const ModExpr& x, const ModExpr& y);
    ModExpr pow(long n) const;

    struct Node;

private:
    explicit ModExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Memoised atom values at one point.
class AtomCache {
public:
    AtomCache(TauPoint tau, EvalConfig cfg) : tau_(std::move(tau)), cfg_(cfg) {}

    const TauPoint& tau() const { return tau_; }
    const EvalConfig& config() const { return cfg_; }
    const BigComplex& siegel12n(const FracIndex& idx);
    const BigComplex& fricke(const FracIndex& idx);
    const BigComplex& j();

private:
    const EisensteinValues& eis();
    TauPoint tau_;
    EvalConfig cfg_;
    std::optional<EisensteinValues> eis_;
    std::map<FracIndex, BigComplex> siegel_, fricke_;
};

/// fn^gamma(theta_K) for gamma running over `classes` (indices into
/// w.reps()); all classes when empty.
std::vector<BigComplex> cm_conjugates(const ModExpr& fn, const WGroup& w, AtomCache& cache,
                                      const std::vector<size_t>& classes = {});

struct RecognizedPoly {
    std::vector<Int> coeffs;  // low degree first, monic
    BigFloat residual;        // max distance of a coefficient to its integer
    bool conjugated = false;  // complex conjugates were appended
};

/// Rounds prod (x - c) to an integer polynomial.  Complex conjugates are
/// appended when the list is not closed under conjugation.  Throws
/// RecognitionFailed when the residual is not below 10^-tol_digits.
RecognizedPoly recognize_alg_int(const std::vector<BigComplex>& conjugates, long tol_digits);

/// min |x_i - x_j| / max(|x_i|, |x_j|) over pairs; 1 for fewer than two values.
BigFloat min_relative_separation(const std::vector<BigComplex>& xs);

struct CmConfig {
    EvalConfig eval;                // default 128 digits
    long separation_digits = 0;     // 0: digits / 2
    long recognition_digits = 20;

    long separation() const { return separation_digits > 0 ? separation_digits : eval.digits / 2; }
};

struct TraceTowerLevel {
    long m = 0;
    long degree = 0;  // [K_(p^m) : K_(p)]
    std::vector<BigComplex> traces;
    BigFloat separation;
    bool passed = false;
};

struct TraceTowerReport {
    long dk = 0, p = 0, n = 0;
    std::vector<Int> M;  // M_1..M_n
    BigComplex alpha;
    std::vector<BigFloat> fm_residuals;  // m = 2..n at theta_K
    std::vector<TraceTowerLevel> levels;
    bool all_passed() const;
};

TraceTowerReport verify_trace_tower(const ImagQuadData& K, long p, long n, const CmConfig& cfg = {},
                         std::vector<long> m_range = {});

struct RamaLevel {
    long k = 0, N = 0, n = 0;
    long degree = 0;
    BigFloat separation;
    bool passed = false;
};

struct RamaReport {
    long dk = 0;
    std::vector<long> levels;
    std::vector<long> step_degrees;           // d_s = [K_(N_s) : K_(N_{s-1})], d_1 = [K_(N_1) : K]
    std::vector<BigComplex> denominator_norms; // s = 2..t
    BigComplex beta;
    std::vector<RamaLevel> checks;
    bool all_passed() const;
};

RamaReport rama_beta(const ImagQuadData& K, const std::vector<long>& levels, const std::vector<long>& exponents = {1, 2},
                     const CmConfig& cfg = {});

struct NormalCmReport {
    long dk = 0, N = 0, d = 0;
    long digits_used = 0;
    std::vector<BigComplex> conjugates;  // alpha^{g_k}
    CharacterTable characters;
    std::vector<BigComplex> sums;        // row-major t*d + i
    std::vector<Int> norms;
    std::vector<Int> denominators;
    std::vector<Rat> coefficients;       // sum_i 1/M(chi_i, t), t = 0..d-1
    std::vector<BigFloat> criterion;     // |sum_k chi(g_k^{-1}) beta^{g_k}| / scale per chi
    bool normal = false;
    bool all_passed() const { return normal; }
};

NormalCmReport normal_element_cm(const ImagQuadData& K, long N, const CmConfig& cfg = {});

struct ProbePoint {
    long dk = 0;
    bool integral = false;
    std::optional<RecognizedPoly> poly;
    std::string error;
};

std::vector<ProbePoint> integrality_probe(const ModExpr& fn, const std::vector<long>& discriminants,
                                          const CmConfig& cfg = {});

}  // namespace cft

#endif  // CFT_CM_HPP
