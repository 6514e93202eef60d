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

#include "cft/cm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cft/coprime_seq.hpp"
#include "cft/error.hpp"

namespace cft {

// ---------------------------------------------------------------- fields

const std::vector<long>& supported_discriminants() {
    static const std::vector<long> list{-7, -8, -11, -19, -43, -67, -163};
    return list;
}

ImagQuadData imag_quad(long dk) {
    if (dk == -3 || dk == -4)
        fail(ErrorKind::UnsupportedDiscriminant, "d_K = " + std::to_string(dk) + " (Q(sqrt-1), Q(sqrt-3)) is excluded");
    const auto& s = supported_discriminants();
    if (std::find(s.begin(), s.end(), dk) == s.end())
        fail(ErrorKind::UnsupportedDiscriminant,
             "d_K = " + std::to_string(dk) + " is not a supported class-number-one discriminant");
    return {dk, -dk, (dk * dk - dk) / 4, 1};
}

TauPoint ImagQuadData::theta(long digits) const {
    return TauPoint(BigComplex(BigFloat(Rat(dk, 2), digits), sqrt(BigFloat(Int(-dk), digits)) / 2));
}

// ---------------------------------------------------------------- W_{K,N}

long WMatrix::det() const { return mod_floor((u - B * v) * u + C * v * v, N); }

WMatrix WMatrix::reduced(long M) const {
    if (M < 1 || N % M != 0) fail(ErrorKind::LevelMismatch, "cannot reduce level " + std::to_string(N) + " mod " + std::to_string(M));
    return {M, mod_floor(u, M), mod_floor(v, M), B, C};
}

bool WMatrix::is_pm_identity() const {
    return mod_floor(v, N) == 0 && (mod_floor(u - 1, N) == 0 || mod_floor(u + 1, N) == 0);
}

namespace {

std::pair<long, long> canonical_pair(long u, long v, long N) {
    const std::pair<long, long> p{mod_floor(u, N), mod_floor(v, N)}, q{mod_floor(-u, N), mod_floor(-v, N)};
    return std::min(p, q);
}

}  // namespace

WGroup::WGroup(const ImagQuadData& K, long N) : K_(K), N_(N) {
    if (N < 1) fail(ErrorKind::InvalidArgument, "level must be positive");
    for (long u = 0; u < N; ++u)
        for (long v = 0; v < N; ++v) {
            WMatrix g{N, u, v, K.B, K.C};
            if (gcd_long(g.det(), N) == 1) elements_.push_back(g);
        }
    if (elements_.size() <= 1000)
        for (const auto& x : elements_)
            for (const auto& y : elements_)
                if (gcd_long(mul(x, y).det(), N) != 1)
                    fail(ErrorKind::VerificationFailed, "W_{K,N} not closed under multiplication");

    const auto id = canonical_pair(1, 0, N);
    std::vector<std::pair<long, long>> classes;
    for (const auto& g : elements_) classes.push_back(canonical_pair(g.u, g.v, N));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::stable_partition(classes.begin(), classes.end(), [&](const auto& c) { return c == id; });
    index_.assign(static_cast<size_t>(N * N), -1);
    for (size_t i = 0; i < classes.size(); ++i) {
        const auto [u, v] = classes[i];
        reps_.push_back({N, u, v, K.B, K.C});
        index_[static_cast<size_t>(u * N + v)] = static_cast<long>(i);
        index_[static_cast<size_t>(mod_floor(-u, N) * N + mod_floor(-v, N))] = static_cast<long>(i);
    }
}

size_t WGroup::rep_index(const WMatrix& g) const {
    const WMatrix r = g.N == N_ ? g : g.reduced(N_);
    const long k = index_[static_cast<size_t>(mod_floor(r.u, N_) * N_ + mod_floor(r.v, N_))];
    if (k < 0) fail(ErrorKind::InvalidArgument, "matrix is not in W_{K,N}");
    return static_cast<size_t>(k);
}

WMatrix WGroup::mul(const WMatrix& x, const WMatrix& y) const {
    // lower row of the product: [x.c y.a + x.d y.c, x.c y.b + x.d y.d] = [v, u]
    const long v = mod_floor(x.c() * y.a() + x.d() * y.c(), N_);
    const long u = mod_floor(x.c() * y.b() + x.d() * y.d(), N_);
    WMatrix p{N_, u, v, K_.B, K_.C};
    if (mod_floor(x.a() * y.a() + x.b() * y.c() - p.a(), N_) != 0 ||
        mod_floor(x.a() * y.b() + x.b() * y.d() - p.b(), N_) != 0)
        fail(ErrorKind::VerificationFailed, "product left the matrix family");
    return p;
}

FiniteAbelianGroup WGroup::quotient_group() const {
    FiniteAbelianGroup g;
    const size_t n = reps_.size();
    g.table.assign(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g.table[i][j] = static_cast<int>(rep_index(mul(reps_[i], reps_[j])));
    return g;
}

std::vector<std::vector<size_t>> WGroup::fibers(const WGroup& lower) const {
    std::vector<std::vector<size_t>> out(lower.reps().size());
    for (size_t i = 0; i < reps_.size(); ++i) out[lower.rep_index(reps_[i].reduced(lower.level()))].push_back(i);
    return out;
}

WGroup enumerate_W(const ImagQuadData& K, long N) {
    if (N < 2) fail(ErrorKind::InvalidArgument, "level must be at least 2");
    return WGroup(K, N);
}

long ray_degree(const ImagQuadData& K, long N) {
    if (K.class_number != 1) fail(ErrorKind::UnsupportedDiscriminant, "class number > 1");
    return enumerate_W(K, N).quotient_order();
}

FracIndex act_on_index(const WMatrix& g, const FracIndex& idx) {
    if (g.N != idx.N)
        fail(ErrorKind::LevelMismatch, "matrix level " + std::to_string(g.N) + " vs index level " + std::to_string(idx.N));
    return FracIndex::make(g.a() * idx.a + g.c() * idx.b, g.b() * idx.a + g.d() * idx.b, idx.N);
}

// ---------------------------------------------------------------- expressions

struct ModExpr::Node {
    Kind kind;
    Rat c;
    FracIndex idx;
    long exponent = 1;
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodeP = std::shared_ptr<const ModExpr::Node>;

NodeP make_node(ModExpr::Kind k, Rat c = 0, FracIndex idx = {}, long e = 1, std::vector<NodeP> kids = {}) {
    return std::make_shared<const ModExpr::Node>(ModExpr::Node{k, std::move(c), idx, e, std::move(kids)});
}

long node_level(const NodeP& n) {
    switch (n->kind) {
        case ModExpr::Kind::Siegel12N:
        case ModExpr::Kind::Fricke: return n->idx.N;
        case ModExpr::Kind::Const:
        case ModExpr::Kind::J: return 1;
        default: {
            long l = 1;
            for (const auto& k : n->kids) l = lcm_long(l, node_level(k));
            return l;
        }
    }
}

NodeP node_act(const NodeP& n, const WMatrix& g) {
    switch (n->kind) {
        case ModExpr::Kind::Siegel12N:
        case ModExpr::Kind::Fricke:
            if (g.N % n->idx.N != 0) fail(ErrorKind::LevelMismatch, "function level does not divide matrix level");
            return make_node(n->kind, 0, act_on_index(g.reduced(n->idx.N), n->idx));
        case ModExpr::Kind::Const:
        case ModExpr::Kind::J: return n;
        default: {
            std::vector<NodeP> kids;
            for (const auto& k : n->kids) kids.push_back(node_act(k, g));
            return make_node(n->kind, n->c, n->idx, n->exponent, std::move(kids));
        }
    }
}

BigComplex node_eval(const NodeP& n, AtomCache& cache) {
    const long w = cache.config().digits + cache.config().guard;
    switch (n->kind) {
        case ModExpr::Kind::Const: return BigComplex(BigFloat(n->c, w));
        case ModExpr::Kind::Siegel12N: return cache.siegel12n(n->idx);
        case ModExpr::Kind::Fricke: return cache.fricke(n->idx);
        case ModExpr::Kind::J: return cache.j();
        case ModExpr::Kind::Add: return node_eval(n->kids[0], cache) + node_eval(n->kids[1], cache);
        case ModExpr::Kind::Sub: return node_eval(n->kids[0], cache) - node_eval(n->kids[1], cache);
        case ModExpr::Kind::Mul: return node_eval(n->kids[0], cache) * node_eval(n->kids[1], cache);
        case ModExpr::Kind::Div: {
            const BigComplex d = node_eval(n->kids[1], cache);
            if (d.is_zero()) fail(ErrorKind::DenominatorVanishes, "denominator vanishes at tau = " + cache.tau().tau().str(20));
            return node_eval(n->kids[0], cache) / d;
        }
        case ModExpr::Kind::Pow: return pow(node_eval(n->kids[0], cache), n->exponent);
    }
    fail(ErrorKind::InvalidArgument, "bad expression node");
}

std::string idx_str(const FracIndex& i) {
    return "(" + std::to_string(i.a) + "," + std::to_string(i.b) + "," + std::to_string(i.N) + ")";
}

std::string node_str(const NodeP& n) {
    switch (n->kind) {
        case ModExpr::Kind::Const: return n->c >= 0 ? rat_to_string(n->c) : "(" + rat_to_string(n->c) + ")";
        case ModExpr::Kind::Siegel12N: return "g12N" + idx_str(n->idx);
        case ModExpr::Kind::Fricke: return "fricke" + idx_str(n->idx);
        case ModExpr::Kind::J: return "j";
        case ModExpr::Kind::Add: return "(" + node_str(n->kids[0]) + "+" + node_str(n->kids[1]) + ")";
        case ModExpr::Kind::Sub: return "(" + node_str(n->kids[0]) + "-" + node_str(n->kids[1]) + ")";
        case ModExpr::Kind::Mul: return node_str(n->kids[0]) + "*" + node_str(n->kids[1]);
        case ModExpr::Kind::Div: return node_str(n->kids[0]) + "/" + node_str(n->kids[1]);
        case ModExpr::Kind::Pow: {
            const std::string base = node_str(n->kids[0]);
            return (n->kids[0]->kids.empty() ? base : "(" + base + ")") + "^" + std::to_string(n->exponent);
        }
    }
    return "?";
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ModExpr run() {
        ModExpr e = expr();
        skip();
        if (pos_ != s_.size()) error("trailing input");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorKind::InvalidArgument, "cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        const size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            error("integer expected");
        return std::stol(s_.substr(start, pos_ - start));
    }
    std::vector<long> args(size_t n) {
        if (!eat('(')) error("'(' expected");
        std::vector<long> out;
        for (size_t i = 0; i < n; ++i) {
            if (i && !eat(',')) error("',' expected");
            out.push_back(integer());
        }
        if (!eat(')')) error("')' expected");
        return out;
    }
    ModExpr expr() {
        ModExpr e = term();
        for (;;) {
            if (eat('+'))
                e = e + term();
            else if (eat('-'))
                e = e - term();
            else
                return e;
        }
    }
    ModExpr term() {
        ModExpr e = factor();
        for (;;) {
            if (eat('*'))
                e = e * factor();
            else if (eat('/'))
                e = e / factor();
            else
                return e;
        }
    }
    ModExpr factor() {
        ModExpr e = unary();
        if (eat('^')) e = e.pow(integer());
        return e;
    }
    ModExpr unary() {
        if (eat('-')) return ModExpr::constant(-1) * unary();
        return primary();
    }
    ModExpr primary() {
        skip();
        if (eat('(')) {
            ModExpr e = expr();
            if (!eat(')')) error("')' expected");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return ModExpr::constant(integer());
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (name == "j") return ModExpr::j();
        if (name == "g12N" || name == "siegel12N") {
            const auto a = args(3);
            return ModExpr::siegel12n(FracIndex::make(a[0], a[1], a[2]));
        }
        if (name == "fricke") {
            const auto a = args(3);
            return ModExpr::fricke(FracIndex::make(a[0], a[1], a[2]));
        }
        if (name == "fm") {
            const auto a = args(2);
            return ModExpr::fm(a[0], a[1]);
        }
        error("unknown atom '" + name + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

ModExpr ModExpr::constant(const Rat& c) { return ModExpr(make_node(Kind::Const, c)); }
ModExpr ModExpr::siegel12n(const FracIndex& idx) { return ModExpr(make_node(Kind::Siegel12N, 0, idx)); }
ModExpr ModExpr::fricke(const FracIndex& idx) { return ModExpr(make_node(Kind::Fricke, 0, idx)); }
ModExpr ModExpr::j() { return ModExpr(make_node(Kind::J)); }

ModExpr ModExpr::fm(long p, long m) {
    if (p < 3 || !is_prime_long(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
    long pm = 1;
    for (long k = 0; k < m; ++k) pm *= p;
    Int scale = 1;
    for (long k = 0; k < 2 * (m + 1); ++k) scale *= p;
    const ModExpr fc = fricke(FracIndex::make(1, 0, p));
    return constant(Rat(scale)) * (fricke(FracIndex::make(0, 1, pm)) - fc) / (fricke(FracIndex::make(0, 1, p)) - fc);
}

ModExpr ModExpr::parse(const std::string& text) { return Parser(text).run(); }

ModExpr::Kind ModExpr::kind() const { return node_->kind; }
long ModExpr::level() const { return node_level(node_); }
ModExpr ModExpr::act(const WMatrix& g) const { return ModExpr(node_act(node_, g)); }
BigComplex ModExpr::eval(AtomCache& cache) const { return node_eval(node_, cache); }
std::string ModExpr::str() const { return node_str(node_); }

ModExpr operator+(const ModExpr& x, const ModExpr& y) { return ModExpr(make_node(ModExpr::Kind::Add, 0, {}, 1, {x.node_, y.node_})); }
ModExpr operator-(const ModExpr& x, const ModExpr& y) { return ModExpr(make_node(ModExpr::Kind::Sub, 0, {}, 1, {x.node_, y.node_})); }
ModExpr operator*(const ModExpr& x, const ModExpr& y) { return ModExpr(make_node(ModExpr::Kind::Mul, 0, {}, 1, {x.node_, y.node_})); }
ModExpr operator/(const ModExpr& x, const ModExpr& y) { return ModExpr(make_node(ModExpr::Kind::Div, 0, {}, 1, {x.node_, y.node_})); }
ModExpr ModExpr::pow(long n) const { return ModExpr(make_node(Kind::Pow, 0, {}, n, {node_})); }

// ---------------------------------------------------------------- evaluation

namespace {

EvalConfig widened(const EvalConfig& c) {
    EvalConfig w = c;
    w.digits = c.digits + c.guard;
    return w;
}

}  // namespace

const EisensteinValues& AtomCache::eis() {
    if (!eis_) eis_ = eisenstein(tau_, widened(cfg_));
    return *eis_;
}

const BigComplex& AtomCache::siegel12n(const FracIndex& idx) {
    auto it = siegel_.find(idx);
    if (it == siegel_.end()) it = siegel_.emplace(idx, pow(siegel_g(idx, tau_, widened(cfg_)), 12 * idx.N)).first;
    return it->second;
}

const BigComplex& AtomCache::fricke(const FracIndex& idx) {
    auto it = fricke_.find(idx);
    if (it == fricke_.end()) it = fricke_.emplace(idx, fricke_f(idx, tau_, eis(), widened(cfg_))).first;
    return it->second;
}

const BigComplex& AtomCache::j() { return eis().j; }

std::vector<BigComplex> cm_conjugates(const ModExpr& fn, const WGroup& w, AtomCache& cache,
                                      const std::vector<size_t>& classes) {
    if (w.level() % fn.level() != 0)
        fail(ErrorKind::LevelMismatch, "function of level " + std::to_string(fn.level()) + " under W of level " +
                                           std::to_string(w.level()));
    std::vector<BigComplex> out;
    if (classes.empty())
        for (const auto& g : w.reps()) out.push_back(fn.act(g).eval(cache));
    else
        for (size_t k : classes) out.push_back(fn.act(w.reps().at(k)).eval(cache));
    return out;
}

RecognizedPoly recognize_alg_int(const std::vector<BigComplex>& conjugates, long tol_digits) {
    if (conjugates.empty()) fail(ErrorKind::EmptyInput, "no conjugates");
    long w = 0;
    for (const auto& c : conjugates) w = std::max(w, c.digits());
    const BigFloat tol = pow10(-tol_digits, w);

    RecognizedPoly out{{}, BigFloat(w), false};
    std::vector<BigComplex> roots = conjugates;
    std::vector<bool> used(roots.size(), false);
    bool closed = true;
    for (size_t i = 0; i < roots.size() && closed; ++i) {
        const BigComplex cc = conj(roots[i]);
        const BigFloat scale = std::max(BigFloat(1.0, w), abs(roots[i]));
        bool hit = false;
        for (size_t k = 0; k < roots.size() && !hit; ++k)
            if (!used[k] && abs(roots[k] - cc) <= tol * scale) used[k] = hit = true;
        closed = hit;
    }
    if (!closed) {
        out.conjugated = true;
        for (const auto& c : conjugates) roots.push_back(conj(c));
    }

    std::vector<BigComplex> poly{BigComplex(BigFloat(1.0, w))};
    for (const auto& r : roots) {
        std::vector<BigComplex> next(poly.size() + 1, BigComplex(w));
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= r * poly[k];
        }
        poly = std::move(next);
    }
    for (const auto& c : poly) {
        const Int n = round_to_int(c.re);
        out.coeffs.push_back(n);
        const BigFloat e = std::max(abs(c.re - BigFloat(n, w)), abs(c.im));
        if (e > out.residual) out.residual = e;
    }
    if (!(out.residual < tol))
        fail(ErrorKind::RecognitionFailed, "rounding residual " + out.residual.sci(3) + " >= 1e-" +
                                               std::to_string(tol_digits) + "; raise the precision and retry");
    return out;
}

BigFloat min_relative_separation(const std::vector<BigComplex>& xs) {
    long w = kMinDigits;
    for (const auto& x : xs) w = std::max(w, x.digits());
    BigFloat best(1.0, w);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            const BigFloat scale = std::max(abs(xs[i]), abs(xs[j]));
            if (scale.is_zero()) return BigFloat(w);
            const BigFloat s = abs(xs[i] - xs[j]) / scale;
            if (s < best) best = s;
        }
    return best;
}

// ---------------------------------------------------------------- trace tower over K_(p)

bool TraceTowerReport::all_passed() const {
    return !levels.empty() && std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.passed; });
}

TraceTowerReport verify_trace_tower(const ImagQuadData& K, long p, long n, const CmConfig& cfg, std::vector<long> m_range) {
    if (p < 3 || !is_prime_long(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (n < 2) fail(ErrorKind::InvalidArgument, "n must be at least 2");
    if (m_range.empty())
        for (long m = 2; m <= n; ++m) m_range.push_back(m);
    for (long m : m_range)
        if (m < 2 || m > n) fail(ErrorKind::InvalidArgument, "m out of range 2.." + std::to_string(n));

    TraceTowerReport rep;
    rep.dk = K.dk;
    rep.p = p;
    rep.n = n;
    Int prod = 1;
    for (long m = 1; m <= n; ++m) {
        const Int Mm = m == 1 ? Int(1) : Int(1 + p * prod);
        rep.M.push_back(Mm);
        prod *= Mm;
    }
    ModExpr alpha = ModExpr::constant(0);
    for (long m = 2; m <= n; ++m)
        alpha = m == 2 ? ModExpr::constant(Rat(Int(1), rep.M[1])) * ModExpr::fm(p, 2)
                       : alpha + ModExpr::constant(Rat(Int(1), rep.M[static_cast<size_t>(m - 1)])) * ModExpr::fm(p, m);

    const TauPoint theta = K.theta(cfg.eval.digits + cfg.eval.guard);
    for (long m = 2; m <= n; ++m) rep.fm_residuals.push_back(fm_func(p, m, theta, cfg.eval).residual);

    long pn = 1;
    for (long k = 0; k < n; ++k) pn *= p;
    const WGroup top(K, pn), base(K, p);
    AtomCache cache(theta, cfg.eval);
    // alpha^gamma for gamma = +-I mod p
    const auto kernel = top.fibers(base)[0];
    const auto values = cm_conjugates(alpha, top, cache, kernel);
    rep.alpha = values[0].with_digits(cfg.eval.digits);

    const BigFloat tol = pow10(-cfg.separation(), cfg.eval.digits);
    for (long m : m_range) {
        long pm = 1;
        for (long k = 0; k < m; ++k) pm *= p;
        const WGroup mid(K, pm);
        TraceTowerLevel lvl;
        lvl.m = m;
        std::map<size_t, BigComplex> traces;
        for (size_t k = 0; k < kernel.size(); ++k) {
            const size_t cls = mid.rep_index(top.reps()[kernel[k]].reduced(pm));
            auto it = traces.find(cls);
            if (it == traces.end())
                traces.emplace(cls, values[k]);
            else
                it->second += values[k];
        }
        for (auto& [cls, t] : traces) lvl.traces.push_back(t.with_digits(cfg.eval.digits));
        lvl.degree = static_cast<long>(lvl.traces.size());
        lvl.separation = min_relative_separation(lvl.traces);
        lvl.passed = lvl.separation > tol;
        rep.levels.push_back(std::move(lvl));
    }
    for (const auto& l : rep.levels)
        if (!l.passed)
            fail(ErrorKind::SeparationTooTight, "trace conjugates at m = " + std::to_string(l.m) + " separated by only " +
                                                    l.separation.sci(3) + "; raise the precision");
    return rep;
}

// ---------------------------------------------------------------- norm-type generator along a level chain

bool RamaReport::all_passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

RamaReport rama_beta(const ImagQuadData& K, const std::vector<long>& levels, const std::vector<long>& exponents,
                     const CmConfig& cfg) {
    if (levels.empty() || levels[0] < 2) fail(ErrorKind::InvalidArgument, "levels must start at N_1 >= 2");
    for (size_t s = 1; s < levels.size(); ++s)
        if (levels[s] % levels[s - 1] != 0) fail(ErrorKind::InvalidArgument, "levels must form a divisibility chain");
    for (long e : exponents)
        if (e == 0) fail(ErrorKind::InvalidArgument, "exponent 0");

    RamaReport rep;
    rep.dk = K.dk;
    rep.levels = levels;
    const size_t t = levels.size();
    std::vector<WGroup> W;
    for (long N : levels) W.emplace_back(K, N);
    for (size_t s = 0; s < t; ++s)
        rep.step_degrees.push_back(s == 0 ? W[0].quotient_order() : W[s].quotient_order() / W[s - 1].quotient_order());

    const long wd = cfg.eval.digits + cfg.eval.guard;
    AtomCache cache(K.theta(wd), cfg.eval);
    // beta_s^gamma over W_s / +-I, and the relative norms over fibres of W_{s-1}
    std::vector<std::vector<BigComplex>> vals(t), norms(t);
    for (size_t s = 0; s < t; ++s) {
        vals[s] = cm_conjugates(ModExpr::siegel12n(FracIndex::make(0, 1, levels[s])), W[s], cache);
        if (s == 0) continue;
        for (const auto& fib : W[s].fibers(W[s - 1])) {
            BigComplex pr(BigFloat(1.0, wd));
            for (size_t i : fib) pr *= vals[s][i];
            norms[s].push_back(std::move(pr));
        }
        rep.denominator_norms.push_back(norms[s][0].with_digits(cfg.eval.digits));
    }
    std::vector<BigComplex> beta;
    for (const auto& g : W[t - 1].reps()) {
        BigComplex b = vals[0][W[0].rep_index(g)];
        for (size_t s = 1; s < t; ++s)
            b *= pow(vals[s][W[s].rep_index(g)], rep.step_degrees[s]) / norms[s][W[s - 1].rep_index(g)];
        beta.push_back(std::move(b));
    }
    rep.beta = beta[0].with_digits(cfg.eval.digits);

    const BigFloat tol = pow10(-cfg.separation(), cfg.eval.digits);
    for (size_t k = 0; k < t; ++k) {
        std::vector<BigComplex> nk;
        for (const auto& fib : W[t - 1].fibers(W[k])) {
            BigComplex pr(BigFloat(1.0, wd));
            for (size_t i : fib) pr *= beta[i];
            nk.push_back(std::move(pr));
        }
        for (long e : exponents) {
            std::vector<BigComplex> conj;
            for (const auto& x : nk) conj.push_back(pow(x, e));
            RamaLevel c;
            c.k = static_cast<long>(k) + 1;
            c.N = levels[k];
            c.n = e;
            c.degree = static_cast<long>(conj.size());
            c.separation = min_relative_separation(conj).with_digits(cfg.eval.digits);
            c.passed = c.separation > tol;
            rep.checks.push_back(std::move(c));
        }
    }
    for (const auto& c : rep.checks)
        if (!c.passed)
            fail(ErrorKind::SeparationTooTight, "norm conjugates at N = " + std::to_string(c.N) + ", n = " +
                                                    std::to_string(c.n) + " separated by only " + c.separation.sci(3));
    return rep;
}

// ---------------------------------------------------------------- normal element of K_(N)/K

NormalCmReport normal_element_cm(const ImagQuadData& K, long N, const CmConfig& cfg) {
    if (N < 2) fail(ErrorKind::InvalidArgument, "level must be at least 2");
    const WGroup W(K, N);
    const long d = W.quotient_order();
    NormalCmReport rep;
    rep.dk = K.dk;
    rep.N = N;
    rep.d = d;
    rep.characters = character_table(W.quotient_group());
    const auto& chi = rep.characters.values;
    const auto ud = static_cast<size_t>(d);

    std::map<std::vector<int>, size_t> by_values;
    for (size_t i = 0; i < ud; ++i) by_values[chi[i]] = i;
    auto power_of = [&](size_t i, long a) {
        std::vector<int> v(ud);
        for (size_t k = 0; k < ud; ++k) v[k] = static_cast<int>(mod_floor(a * chi[i][k], d));
        return by_values.at(v);
    };
    std::vector<long> units;
    for (long a = 1; a <= d; ++a)
        if (gcd_long(a, d) == 1) units.push_back(a);

    const ModExpr alpha = ModExpr::siegel12n(FracIndex::make(0, 1, N));
    long digits = cfg.eval.digits;
    for (int attempt = 0;; ++attempt) {
        EvalConfig ec = cfg.eval;
        ec.digits = digits;
        const long wd = digits + ec.guard;
        AtomCache cache(K.theta(wd), ec);
        rep.conjugates = cm_conjugates(alpha, W, cache);

        // S(chi_i, t) and the size of the largest term in it
        rep.sums.clear();
        std::vector<BigFloat> scale;
        std::vector<BigComplex> roots;
        for (long e = 0; e < d; ++e) roots.push_back(exp2pii(Rat(-e, d), wd));
        for (long t = 0; t < d; ++t)
            for (size_t i = 0; i < ud; ++i) {
                BigComplex s(wd);
                BigFloat sc(wd);
                for (size_t k = 0; k < ud; ++k) {
                    const BigComplex term = pow(rep.conjugates[k], t);
                    sc = std::max(sc, abs(term));
                    s += roots[static_cast<size_t>(chi[i][k])] * term;
                }
                rep.sums.push_back(std::move(s));
                scale.push_back(std::move(sc));
            }

        // |N(S)| = prod over a in (Z/d)^x of |S(chi^a, t)|^{2d}
        const BigFloat zero_tol = pow10(-(digits / 2), wd);
        std::vector<bool> zero(rep.sums.size());
        long loss = 0;
        for (size_t k = 0; k < rep.sums.size(); ++k) {
            const BigFloat a = abs(rep.sums[k]);
            zero[k] = a <= zero_tol * scale[k];
            if (!zero[k]) loss = std::max(loss, scale[k].exponent10() - a.exponent10() + 1);
        }
        long need = 0;
        std::vector<BigFloat> normf(rep.sums.size(), BigFloat(wd));
        for (long t = 0; t < d; ++t)
            for (size_t i = 0; i < ud; ++i) {
                const size_t k = static_cast<size_t>(t) * ud + i;
                if (zero[k]) continue;
                BigFloat nf(1.0, wd);
                for (long a : units) nf *= abs(rep.sums[static_cast<size_t>(t) * ud + power_of(i, a)]);
                nf = pow(nf, BigFloat(Int(2 * d), wd));
                need = std::max(need, nf.exponent10());
                normf[k] = std::move(nf);
            }
        const long required = need + loss + cfg.recognition_digits + 20;
        if (required > digits) {
            if (attempt >= 6) fail(ErrorKind::PrecisionUnreachable, "norms need " + std::to_string(required) + " digits");
            digits = required + 10;
            continue;
        }
        rep.digits_used = digits;
        rep.norms.clear();
        for (size_t k = 0; k < rep.sums.size(); ++k) {
            if (zero[k]) {
                rep.norms.push_back(0);
                continue;
            }
            const auto poly = recognize_alg_int({BigComplex(normf[k])}, cfg.recognition_digits);
            rep.norms.push_back(-poly.coeffs[0]);
        }
        rep.denominators = coprime_seq(rep.norms).outputs;
        rep.coefficients.clear();
        for (long t = 0; t < d; ++t) {
            Rat c = 0;
            for (size_t i = 0; i < ud; ++i) c += Rat(Int(1), rep.denominators[static_cast<size_t>(t) * ud + i]);
            rep.coefficients.push_back(c);
        }

        // character sums for beta: sum_t c_t S(chi, t), exact zeros dropped
        rep.criterion.clear();
        rep.normal = true;
        const BigFloat tol = pow10(-cfg.separation(), wd);
        for (size_t i = 0; i < ud; ++i) {
            BigComplex total(wd);
            BigFloat big(wd);
            for (long t = 0; t < d; ++t) {
                const size_t k = static_cast<size_t>(t) * ud + i;
                if (rep.norms[k] == 0) continue;
                const BigComplex term = rep.sums[k] * BigFloat(rep.coefficients[static_cast<size_t>(t)], wd);
                big = std::max(big, abs(term));
                total += term;
            }
            const BigFloat r = big.is_zero() ? BigFloat(wd) : abs(total) / big;
            rep.normal = rep.normal && r > tol;
            rep.criterion.push_back(r.with_digits(cfg.eval.digits));
        }
        if (!rep.normal) fail(ErrorKind::SeparationTooTight, "a character sum of beta is within tolerance of zero");
        return rep;
    }
}

// ---------------------------------------------------------------- probe

std::vector<ProbePoint> integrality_probe(const ModExpr& fn, const std::vector<long>& discriminants,
                                          const CmConfig& cfg) {
    std::vector<ProbePoint> out;
    for (long dk : discriminants) {
        ProbePoint pt;
        pt.dk = dk;
        try {
            const ImagQuadData K = imag_quad(dk);
            const WGroup W(K, fn.level());
            AtomCache cache(K.theta(cfg.eval.digits + cfg.eval.guard), cfg.eval);
            pt.poly = recognize_alg_int(cm_conjugates(fn, W, cache), cfg.recognition_digits);
            pt.integral = true;
        } catch (const Error& e) {
            pt.error = e.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace cft
