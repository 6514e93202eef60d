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

#include "cft/modfunc.hpp"

#include <cmath>

#include "cft/error.hpp"

namespace cft {

std::string to_string(EtaNorm n) { return n == EtaNorm::Scaled ? "scaled" : "classical"; }

TauPoint::TauPoint(BigComplex tau) : tau_(std::move(tau)) {
    if (tau_.im.sign() <= 0) fail(ErrorKind::InvalidArgument, "tau must lie in the upper half-plane");
}

FracIndex FracIndex::make(long a, long b, long N) {
    if (N < 1) fail(ErrorKind::InvalidArgument, "index level must be positive");
    FracIndex x{mod_floor(a, N), mod_floor(b, N), N};
    if (x.a == 0 && x.b == 0)
        fail(ErrorKind::InvalidArgument, "index [" + std::to_string(a) + "/" + std::to_string(N) + ";" +
                                             std::to_string(b) + "/" + std::to_string(N) + "] lies in Z^2");
    return x;
}

FracIndex FracIndex::lifted(long M) const {
    if (M % N != 0) fail(ErrorKind::LevelMismatch, "cannot lift index to a level it does not divide");
    return {a * (M / N), b * (M / N), M};
}

bool same_up_to_sign(const FracIndex& x, const FracIndex& y) {
    const long M = lcm_long(x.N, y.N);
    const auto u = x.lifted(M), v = y.lifted(M);
    return u == v || u == v.negated();
}

namespace {

long working(const EvalConfig& cfg) { return cfg.digits + cfg.guard; }

double log10_abs_q(const TauPoint& tau) {
    return -2 * M_PI * tau.tau().im.to_double() / M_LN10;
}

// Smallest n with n^power |q|^(n - shift) / (1 - rho) < 10^-w, where rho
// bounds the ratio of consecutive terms beyond n.
long terms_needed(const TauPoint& tau, double power, double shift, long w, const EvalConfig& cfg) {
    const double L = log10_abs_q(tau);
    for (long n = 1; n <= cfg.max_terms; ++n) {
        if (n <= shift) continue;
        const double rho_log = L + power * std::log10(1.0 + 1.0 / static_cast<double>(n));
        if (rho_log >= 0) continue;
        const double rho = std::pow(10.0, rho_log);
        const double bound = power * std::log10(static_cast<double>(n)) + (static_cast<double>(n) - shift) * L -
                             std::log10(1 - rho);
        if (bound < -static_cast<double>(w) - 2) return n;
    }
    fail(ErrorKind::PrecisionUnreachable,
         "q-series needs more than " + std::to_string(cfg.max_terms) + " terms at Im(tau) = " +
             tau.tau().im.str(12));
}

BigComplex one(long w) { return BigComplex(BigFloat(1.0, w)); }

BigComplex q_of(const TauPoint& tau, long w) { return exp2pii(tau.tau().with_digits(w)); }

// q^x = exp(2 pi i x tau)
BigComplex q_pow(const TauPoint& tau, const Rat& x, long w) {
    return exp2pii(tau.tau().with_digits(w) * BigFloat(x, w));
}

double abs_double(const Rat& x) { return std::fabs(x.get_d()); }

BigComplex wp_work(const FracIndex& idx, const TauPoint& tau, long w, const EvalConfig& cfg) {
    const BigComplex q = q_of(tau, w);
    const BigComplex u = q_pow(tau, idx.r(), w) * exp2pii(idx.s(), w);
    if ((u - one(w)).is_zero()) fail(ErrorKind::LatticePoint, "z lies in the lattice");
    const BigComplex uinv = one(w) / u;
    const long n_max = terms_needed(tau, 0, 1.0, w + 2, cfg);
    auto term = [&](const BigComplex& x) {
        const BigComplex d = one(w) - x;
        return x / (d * d);
    };
    BigComplex sum = term(u) + BigComplex(BigFloat(Rat(1, 12), w));
    BigComplex qn = one(w);
    for (long n = 1; n <= n_max; ++n) {
        qn *= q;
        sum += term(qn * u) + term(qn * uinv) - term(qn) * 2;
    }
    const BigFloat pi = BigFloat::pi(w);
    return sum * (-(pi * pi * 4));
}

EisensteinValues eisenstein_at(const TauPoint& tau, long w, const EvalConfig& cfg) {
    const BigComplex q = q_of(tau, w);
    const long n_max = terms_needed(tau, 5, 0, w, cfg);
    BigComplex s3(w), s5(w), qn = one(w);
    for (long n = 1; n <= n_max; ++n) {
        qn *= q;
        const BigComplex t = qn / (one(w) - qn);
        const long n3 = n * n * n;
        s3 += t * n3;
        s5 += t * (n3 * n * n);
    }
    const BigComplex e4 = one(w) + s3 * 240, e6 = one(w) - s5 * 504;
    const BigFloat pi = BigFloat::pi(w);
    const BigFloat pi2 = pi * pi, pi4 = pi2 * pi2;
    EisensteinValues v;
    v.g2 = e4 * (pi4 * 4 / 3);
    v.g3 = e6 * (pi4 * pi2 * 8 / 27);
    const BigComplex g2c = v.g2 * v.g2 * v.g2;
    v.delta = g2c - v.g3 * v.g3 * 27;
    if (v.delta.is_zero()) fail(ErrorKind::PrecisionUnreachable, "discriminant vanished numerically");
    v.j = g2c * 1728 / v.delta;
    return v;
}

}  // namespace

BigComplex eta(const TauPoint& tau, EtaNorm norm, const EvalConfig& cfg) {
    const long w = working(cfg);
    const BigComplex q = q_of(tau, w);
    const long n_max = terms_needed(tau, 0, 0, w, cfg);
    BigComplex prod = q_pow(tau, Rat(1, 24), w), qn = one(w);
    for (long n = 1; n <= n_max; ++n) {
        qn *= q;
        prod *= one(w) - qn;
    }
    if (norm == EtaNorm::Scaled) prod *= exp2pii(Rat(1, 8), w) * sqrt(BigFloat::pi(w) * 2);
    return prod.with_digits(cfg.digits);
}

BigComplex siegel_g_rep(const Rat& r, const Rat& s, const TauPoint& tau, const EvalConfig& cfg) {
    const long w = working(cfg);
    const BigComplex q = q_of(tau, w);
    const BigComplex x = exp2pii(s, w), xinv = conj(x);
    const BigComplex qr = q_pow(tau, r, w), qmr = q_pow(tau, -r, w);
    const Rat b2 = r * r - r + Rat(1, 6);
    BigComplex g = -(q_pow(tau, b2 / 2, w) * exp2pii(s * (r - 1) / 2, w)) * (one(w) - qr * x);
    const long n_max = terms_needed(tau, 0, abs_double(r), w, cfg);
    BigComplex qn = one(w);
    for (long n = 1; n <= n_max; ++n) {
        qn *= q;
        g *= (one(w) - qn * qr * x) * (one(w) - qn * qmr * xinv);
    }
    if (g.is_zero()) fail(ErrorKind::PrecisionUnreachable, "Siegel product underflowed");
    return g.with_digits(cfg.digits);
}

BigComplex siegel_g(const FracIndex& idx, const TauPoint& tau, const EvalConfig& cfg) {
    return siegel_g_rep(idx.r(), idx.s(), tau, cfg);
}

EisensteinValues eisenstein(const TauPoint& tau, const EvalConfig& cfg) {
    // g2^3 and 27 g3^2 nearly cancel when |j| is large
    long extra = static_cast<long>(std::ceil(-log10_abs_q(tau))) + 2;
    EisensteinValues v = eisenstein_at(tau, working(cfg) + extra, cfg);
    const long loss = abs(v.g2).exponent10() * 3 - abs(v.delta).exponent10() + 2;
    if (loss > extra) v = eisenstein_at(tau, working(cfg) + loss + 5, cfg);
    const long d = cfg.digits;
    return {v.g2.with_digits(d), v.g3.with_digits(d), v.delta.with_digits(d), v.j.with_digits(d)};
}

BigComplex wp_value(const FracIndex& idx, const TauPoint& tau, const EvalConfig& cfg) {
    return wp_work(idx, tau, working(cfg), cfg).with_digits(cfg.digits);
}

BigComplex fricke_f(const FracIndex& idx, const TauPoint& tau, const EisensteinValues& e, const EvalConfig& cfg) {
    const long w = working(cfg);
    const BigComplex c = e.g2.with_digits(w) * e.g3.with_digits(w) / e.delta.with_digits(w);
    return (c * wp_work(idx, tau, w, cfg)).with_digits(cfg.digits);
}

BigComplex fricke_f(const FracIndex& idx, const TauPoint& tau, const EvalConfig& cfg) {
    EvalConfig wide = cfg;
    wide.digits = working(cfg);
    return fricke_f(idx, tau, eisenstein(tau, wide), cfg);
}

FmValue fm_func(long p, long m, const TauPoint& tau, const EvalConfig& cfg) {
    if (p < 3 || !is_prime_long(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
    long pm = 1;
    for (long k = 0; k < m; ++k) pm *= p;
    EvalConfig wide = cfg;
    wide.digits = working(cfg);
    const long w = wide.digits;

    const EisensteinValues e = eisenstein(tau, wide);
    const BigComplex fa = fricke_f(FracIndex::make(0, 1, pm), tau, e, wide);
    const BigComplex fb = fricke_f(FracIndex::make(0, 1, p), tau, e, wide);
    const BigComplex fc = fricke_f(FracIndex::make(1, 0, p), tau, e, wide);
    const BigComplex den = fb - fc;
    const BigFloat scale = std::max(abs(fb), abs(fc));
    if (abs(den) <= scale * pow10(-(w - 10), w))
        fail(ErrorKind::DenominatorVanishes, "f_[0;1/p] = f_[1/p;0] at tau = " + tau.tau().str(20));
    BigFloat pp(Int(1), w);
    for (long k = 0; k < 2 * (m + 1); ++k) pp *= p;
    FmValue out{(fa - fc) / den * pp, BigComplex(w), BigFloat(w)};

    const Rat ip(1, p), ipm(1, pm);
    auto g = [&](const Rat& r, const Rat& s) { return siegel_g_rep(r, s, tau, wide); };
    BigComplex prod = g(ip, ipm) * g(-ip, ipm);
    const BigComplex g0 = g(0, ip), g0m = g(0, ipm);
    prod *= g0 * g0;
    prod /= g(ip, ip) * g(-ip, ip) * g0m * g0m;
    BigFloat pf(Int(p * p), w);
    for (long k = 0; k < 2 * m; ++k) pf *= p;
    out.product = prod * pf;

    out.residual = abs(out.ratio - out.product) / std::max(BigFloat(1.0, w), abs(out.ratio));
    if (out.residual > pow10(-(cfg.digits - 12), w))
        fail(ErrorKind::VerificationFailed, "f_m ratio and product forms disagree: residual " + out.residual.str(6));
    out.ratio = out.ratio.with_digits(cfg.digits);
    out.product = out.product.with_digits(cfg.digits);
    out.residual = out.residual.with_digits(cfg.digits);
    return out;
}

PtogResult check_ptog(const FracIndex& idx1, const FracIndex& idx2, const TauPoint& tau, EtaNorm norm,
                      const EvalConfig& cfg) {
    if (same_up_to_sign(idx1, idx2)) fail(ErrorKind::IndexCollision, "indices agree up to sign");
    EvalConfig wide = cfg;
    wide.digits = working(cfg);
    const long N = lcm_long(idx1.N, idx2.N);
    const auto a = idx1.lifted(N), b = idx2.lifted(N);
    PtogResult out{wp_value(a, tau, wide) - wp_value(b, tau, wide), BigComplex(wide.digits), BigFloat(wide.digits)};
    const BigComplex g1 = siegel_g(a, tau, wide), g2 = siegel_g(b, tau, wide);
    const BigComplex gp = siegel_g_rep(Rat(a.a + b.a, N), Rat(a.b + b.b, N), tau, wide);
    const BigComplex gm = siegel_g_rep(Rat(a.a - b.a, N), Rat(a.b - b.b, N), tau, wide);
    const BigComplex e2 = pow(eta(tau, norm, wide), 2);
    out.rhs = -(gp * gm * e2 * e2) / (g1 * g1 * g2 * g2);
    out.residual = abs(out.lhs - out.rhs).with_digits(cfg.digits);
    out.lhs = out.lhs.with_digits(cfg.digits);
    out.rhs = out.rhs.with_digits(cfg.digits);
    return out;
}

}  // namespace cft
