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

#include "cft/error.hpp"
#include "cft/modfunc.hpp"
#include "oracles.hpp"

using namespace cft;

namespace {

EvalConfig at(long digits) {
    EvalConfig c;
    c.digits = digits;
    return c;
}

TauPoint tau_of(double re, double im, long digits = 140) { return TauPoint(BigComplex(re, im, digits)); }

TauPoint tau_rat(const Rat& re, const Rat& im, long digits = 140) {
    return TauPoint(BigComplex(BigFloat(re, digits), BigFloat(im, digits)));
}

TauPoint tau_sqrt(long num_re, long den_re, long rad, long den_im, long digits = 140) {
    // num_re/den_re + i sqrt(rad)/den_im
    return TauPoint(BigComplex(BigFloat(Rat(num_re, den_re), digits), sqrt(BigFloat(Int(rad), digits)) / den_im));
}

bool close(const BigComplex& x, const BigComplex& y, long e) {
    return abs(x - y) < pow10(-e, std::max(x.digits(), y.digits()));
}

bool close_rel(oracle::cplx x, oracle::cplx y, long double tol) {
    return std::abs(x - y) <= tol * std::max(1.0L, std::abs(y));
}

BigComplex real(long v, long digits) { return BigComplex(BigFloat(Int(v), digits)); }

}  // namespace

TEST_CASE("bigfloat basics") {
    BigFloat a(1.0, 50), b(3.0, 80);
    const BigFloat c = a / b;
    CHECK(c.digits() == 80);
    CHECK(abs(c * 3 - BigFloat(1.0, 80)) < pow10(-78, 80));
    CHECK(BigFloat("2.5", 20).str(3) == "2.50");
    CHECK(round_to_int(BigFloat(-7.4, 20)) == -7);
    const BigComplex z(1.0, 2.0, 40);
    CHECK(close(sqrt(z) * sqrt(z), z, 38));
    CHECK(close(pow(z, -3) * pow(z, 3), real(1, 40), 38));
    CHECK(close(exp2pii(Rat(1, 4), 30), BigComplex(0.0, 1.0, 30), 29));
    CHECK(close(exp2pii(Rat(-5, 6), 30), exp2pii(Rat(1, 6), 30), 28));
    try {
        BigFloat bad(8);
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("tau validation and indices") {
    try {
        tau_of(0.3, -1.0);
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
    CHECK(FracIndex::make(-1, 4, 3) == FracIndex{2, 1, 3});
    CHECK(FracIndex::make(1, 2, 3).negated() == FracIndex{2, 1, 3});
    CHECK(same_up_to_sign(FracIndex::make(1, 0, 2), FracIndex::make(2, 0, 4)));
    CHECK(same_up_to_sign(FracIndex::make(1, 1, 3), FracIndex::make(2, 2, 3)));
    CHECK(!same_up_to_sign(FracIndex::make(0, 1, 3), FracIndex::make(1, 0, 3)));
    try {
        FracIndex::make(3, 6, 3);
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("eta") {
    const auto cfg = at(100);
    const auto i = tau_of(0, 1);
    // Gamma(1/4) / (2 pi^(3/4))
    BigFloat g(120), quarter(0.25, 120);
    mpfr_gamma(g.raw(), quarter.raw(), MPFR_RNDN);
    const BigFloat pi = BigFloat::pi(120);
    const BigFloat expect = g / (pow(pi, BigFloat(0.75, 120)) * 2);
    CHECK(close(eta(i, EtaNorm::Classical, cfg), BigComplex(expect), 98));
    CHECK(eta(i, EtaNorm::Classical, cfg).re.str(12) == "0.768225422326");

    const BigComplex p = eta(i, EtaNorm::Scaled, cfg);
    CHECK(abs(abs(p) - expect * sqrt(pi * 2)) < pow10(-98, 100));
    CHECK(abs(arg(p) - pi / 4) < pow10(-98, 100));
    CHECK(abs(p).str(8) == "1.9256556");

    for (const Rat& re : {Rat(0), Rat(31, 100), Rat(-1, 5)}) {
        const auto t = tau_rat(re, Rat(9, 10)), t1 = tau_rat(re + 1, Rat(9, 10));
        CHECK(close(eta(t1, EtaNorm::Classical, cfg), eta(t, EtaNorm::Classical, cfg) * exp2pii(Rat(1, 24), 100), 92));
    }
}

TEST_CASE("siegel functions") {
    const auto cfg = at(100);
    const auto i = tau_of(0, 1);
    // g_[0;1/2](i) = 2 i eta(2i)^2 / eta(i)^2 = 2^(1/4) i
    const BigComplex g = siegel_g(FracIndex::make(0, 1, 2), i, cfg);
    CHECK(close(g, BigComplex(BigFloat(120), pow(BigFloat(2.0, 120), BigFloat(0.25, 120))), 98));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> lvl(2, 12);
    std::uniform_real_distribution<double> re(-1, 1), im(0.4, 2.5);
    for (int k = 0; k < 50; ++k) {
        const long N = lvl(rng);
        std::uniform_int_distribution<long> num(0, N - 1);
        long a = num(rng), b = num(rng);
        if (a == 0 && b == 0) b = 1;
        const auto idx = FracIndex::make(a, b, N);
        const auto t = tau_of(re(rng), im(rng));
        const BigComplex v = siegel_g(idx, t, at(40));
        CHECK(!v.is_zero());
        CHECK(abs(v) > pow10(-30, 40));
        const BigComplex w = siegel_g_rep(-idx.r(), -idx.s(), t, at(40));
        CHECK(abs(abs(v) - abs(w)) < pow10(-36, 40) * abs(v));
        // 12N-th power is independent of the representative
        CHECK(abs(pow(v, 12 * N) - pow(w, 12 * N)) < pow10(-34, 40) * abs(pow(v, 12 * N)));
    }
}

TEST_CASE("j-invariant regressions") {
    const auto cfg = at(128);
    const auto e_i = eisenstein(tau_of(0, 1), cfg);
    CHECK(close(e_i.j, real(1728, 128), 100));
    CHECK(close(eisenstein(tau_sqrt(1, 2, 3, 2), cfg).j, real(0, 128), 100));
    CHECK(close(eisenstein(tau_of(0, 2), cfg).j, real(287496, 128), 100));
    CHECK(close(e_i.delta, e_i.g2 * e_i.g2 * e_i.g2 - e_i.g3 * e_i.g3 * 27, 90));
    // class number one CM values with large Im(tau)
    CHECK(close(eisenstein(tau_sqrt(-163, 2, 163, 2), cfg).j, BigComplex(BigFloat(Int("-262537412640768000"), 128)), 80));
}

TEST_CASE("j against lattice sums") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 2.0);
    for (int k = 0; k < 20; ++k) {
        const oracle::cplx t(re(rng), im(rng));
        const auto j = eisenstein(tau_of(static_cast<double>(t.real()), static_cast<double>(t.imag())), at(30)).j;
        CHECK(close_rel(oracle::to_cplx(j), oracle::j_lattice(t), 1e-9L));
    }
}

TEST_CASE("weierstrass values") {
    const auto cfg = at(60);
    const auto i = tau_of(0, 1);
    const auto idx = FracIndex::make(0, 1, 2);
    CHECK(close_rel(oracle::to_cplx(wp_value(idx, i, cfg)), oracle::wp_lattice({0.5L, 0}, {0, 1}), 1e-8L));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 1.8);
    std::uniform_int_distribution<long> lvl(2, 9);
    for (int k = 0; k < 20; ++k) {
        const long N = lvl(rng);
        std::uniform_int_distribution<long> num(0, N - 1);
        long a = num(rng), b = num(rng);
        if (a == 0 && b == 0) a = 1;
        const auto x = FracIndex::make(a, b, N);
        const double tr = re(rng), ti = im(rng);
        const auto t = tau_of(tr, ti);
        const oracle::cplx tc(tr, ti);
        const oracle::cplx z = tc * static_cast<long double>(a) / static_cast<long double>(N) +
                               static_cast<long double>(b) / static_cast<long double>(N);
        CHECK(close_rel(oracle::to_cplx(wp_value(x, t, cfg)), oracle::wp_lattice(z, tc), 1e-8L));
        CHECK(close(wp_value(x, t, cfg), wp_value(x.negated(), t, cfg), 52));
        CHECK(close(fricke_f(x, t, cfg), fricke_f(x.negated(), t, cfg), 50));
    }
}

TEST_CASE("fricke regression and q-shift") {
    const auto cfg = at(60);
    // g3(i) = 0
    CHECK(abs(fricke_f(FracIndex::make(0, 1, 2), tau_of(0, 1), cfg)) < pow10(-55, 60));
    const BigComplex f = fricke_f(FracIndex::make(0, 1, 2), tau_of(0, 2), cfg);
    CHECK(abs(f.im) < pow10(-55, 60));
    const auto [g2, g3] = oracle::g2g3_lattice({0, 2});
    const oracle::cplx wp = oracle::wp_lattice({0.5L, 0}, {0, 2});
    CHECK(close_rel(oracle::to_cplx(f), g2 * g3 / (g2 * g2 * g2 - 27.0L * g3 * g3) * wp, 1e-9L));
    CHECK(f.re.str(20) == "18.424305537841039845");

    for (long N : {2L, 3L, 5L}) {
        const auto idx = FracIndex::make(1, N - 1, N);
        const auto t = tau_rat(Rat(17, 100), Rat(11, 10)), tn = tau_rat(Rat(17, 100) + N, Rat(11, 10));
        CHECK(close(fricke_f(idx, tn, cfg), fricke_f(idx, t, cfg), 52));
        CHECK(close(pow(siegel_g(idx, tn, cfg), 12 * N), pow(siegel_g(idx, t, cfg), 12 * N), 40));
    }
}

TEST_CASE("f_m two forms") {
    const auto cfg = at(128);
    const auto th7 = tau_sqrt(-7, 2, 7, 2);
    const auto v = fm_func(3, 2, th7, cfg);
    CHECK(v.residual < pow10(-116, 128));
    CHECK(v.ratio.re.str(14) == "4291.0258528881");
    CHECK(v.ratio.im.str(12) == "640.488903190");
    const auto v2 = fm_func(3, 2, tau_of(0, 2), cfg);
    CHECK(v2.residual < pow10(-116, 128));
    CHECK(v2.ratio.re.str(14) == "4494.6746453341");

    const auto one = fm_func(5, 1, tau_of(0.2, 1.3), at(40));
    CHECK(close(one.ratio, real(625, 40), 35));
    CHECK(close(one.product, real(625, 40), 35));

    try {
        fm_func(4, 2, th7, at(40));
        FAIL("expected InvalidArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("wp difference identity") {
    const auto cfg = at(100);
    const auto a = FracIndex::make(0, 1, 3), b = FracIndex::make(1, 0, 3);
    const auto t = tau_of(0, 2);
    CHECK(check_ptog(a, b, t, EtaNorm::Scaled, cfg).residual < pow10(-88, 100));
    CHECK(check_ptog(a, b, t, EtaNorm::Classical, cfg).residual > BigFloat(1.0, 100));
    CHECK(check_ptog(FracIndex::make(0, 1, 2), FracIndex::make(1, 1, 2), tau_of(0, 1), EtaNorm::Scaled, cfg).residual <
          pow10(-88, 100));
    try {
        check_ptog(a, a, t, EtaNorm::Scaled, cfg);
        FAIL("expected IndexCollision");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexCollision);
    }
    try {
        check_ptog(a, a.negated(), t, EtaNorm::Scaled, cfg);
        FAIL("expected IndexCollision");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexCollision);
    }
}

TEST_CASE("precision scaling") {
    const auto t = tau_sqrt(-7, 2, 7, 2);
    const auto idx = FracIndex::make(1, 2, 5);
    CHECK(close(siegel_g(idx, t, at(64)), siegel_g(idx, t, at(128)), 56));
    CHECK(close(fricke_f(idx, t, at(64)), fricke_f(idx, t, at(128)), 56));
    CHECK(close(eisenstein(t, at(64)).j, eisenstein(t, at(128)).j, 56));
    CHECK(close(eta(t, EtaNorm::Scaled, at(64)), eta(t, EtaNorm::Scaled, at(128)), 56));
}

TEST_CASE("precision unreachable") {
    EvalConfig cfg = at(50);
    cfg.max_terms = 100;
    try {
        eta(tau_of(0, 0.001), EtaNorm::Classical, cfg);
        FAIL("expected PrecisionUnreachable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecisionUnreachable);
    }
}
