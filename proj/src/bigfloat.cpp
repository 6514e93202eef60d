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

#include "cft/bigfloat.hpp"

#include <cmath>
#include <utility>

#include "cft/error.hpp"

namespace cft {

mpfr_prec_t digits_to_bits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 8;
}

namespace {

long checked(long digits) {
    if (digits < kMinDigits) fail(ErrorKind::InvalidArgument, "precision below " + std::to_string(kMinDigits) + " digits");
    return digits;
}

}  // namespace

BigFloat::BigFloat(long digits) : digits_(checked(digits)) {
    mpfr_init2(v_, digits_to_bits(digits_));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, long digits) : BigFloat(digits) { mpfr_set_d(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(const Int& v, long digits) : BigFloat(digits) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

BigFloat::BigFloat(const Rat& v, long digits) : BigFloat(digits) { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }

BigFloat::BigFloat(const std::string& s, long digits) : BigFloat(digits) {
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) fail(ErrorKind::InvalidArgument, "bad number '" + s + "'");
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_digits(long digits) const {
    BigFloat r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

void BigFloat::widen(long digits) {
    if (digits <= digits_) return;
    mpfr_prec_round(v_, digits_to_bits(digits), MPFR_RNDN);
    digits_ = digits;
}

long BigFloat::exponent10() const {
    if (mpfr_zero_p(v_)) return -(1L << 40);
    long e2 = 0;
    const double m = mpfr_get_d_2exp(&e2, v_, MPFR_RNDN);
    return static_cast<long>(std::floor(std::log10(std::fabs(m)) + static_cast<double>(e2) * 0.30102999566398120)) + 1;
}

std::string BigFloat::str(long sig) const {
    if (sig <= 0) sig = digits_;
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    const long decimals = std::max(0L, sig - std::max(0L, exponent10()));
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(decimals), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string BigFloat::sci(int sig) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(0, sig - 1), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat BigFloat::pi(long digits) {
    BigFloat r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& y) {
    widen(y.digits_);
    mpfr_add(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& y) {
    widen(y.digits_);
    mpfr_sub(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& y) {
    widen(y.digits_);
    mpfr_mul(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& y) {
    if (y.is_zero()) fail(ErrorKind::DivisionByZero, "BigFloat division by zero");
    widen(y.digits_);
    mpfr_div(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long y) {
    mpfr_mul_si(v_, v_, y, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long y) {
    if (y == 0) fail(ErrorKind::DivisionByZero, "BigFloat division by zero");
    mpfr_div_si(v_, v_, y, MPFR_RNDN);
    return *this;
}

namespace {

template <class F>
BigFloat unary(const BigFloat& x, F f) {
    BigFloat r(x.digits());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(std::max(x.digits(), y.digits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::max(x.digits(), y.digits()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow10(long e, long digits) {
    BigFloat r(digits);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

Int round_to_int(const BigFloat& x) {
    Int r;
    mpfr_get_z(r.get_mpz_t(), x.raw(), MPFR_RNDN);
    return r;
}

BigComplex::BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {
    const long d = digits();
    if (re.digits() < d) re = re.with_digits(d);
    if (im.digits() < d) im = im.with_digits(d);
}

BigComplex::BigComplex(BigFloat r) : re(std::move(r)), im(re.digits()) {}

std::string BigComplex::str(long sig) const {
    std::string i = im.str(sig);
    if (i[0] != '-') i = "+" + i;
    return re.str(sig) + i + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& y) {
    re += y.re;
    im += y.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& y) {
    re -= y.re;
    im -= y.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& y) {
    BigFloat r = re * y.re - im * y.im;
    im = re * y.im + im * y.re;
    re = std::move(r);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& y) {
    const BigFloat n = norm(y);
    if (n.is_zero()) fail(ErrorKind::DivisionByZero, "BigComplex division by zero");
    BigFloat r = (re * y.re + im * y.im) / n;
    im = (im * y.re - re * y.im) / n;
    re = std::move(r);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& y) {
    re *= y;
    im *= y;
    return *this;
}

BigComplex& BigComplex::operator*=(long y) {
    re *= y;
    im *= y;
    return *this;
}

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigFloat abs(const BigComplex& z) {
    BigFloat r(z.digits());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex exp(const BigComplex& z) {
    const BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
    if (z.is_zero()) return z;
    const BigFloat r = abs(z);
    BigFloat a = sqrt((r + z.re) / 2);
    BigFloat b = sqrt((r - z.re) / 2);
    if (z.im.sign() < 0) b = -b;
    return {std::move(a), std::move(b)};
}

BigComplex pow(const BigComplex& z, long n) {
    if (n < 0) return BigComplex(BigFloat(1.0, z.digits())) / pow(z, -n);
    BigComplex r(BigFloat(1.0, z.digits())), b = z;
    for (; n; n >>= 1) {
        if (n & 1) r *= b;
        if (n > 1) b *= b;
    }
    return r;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

BigComplex exp2pii(const BigComplex& z) {
    const BigFloat tp = BigFloat::pi(z.digits()) * 2;
    return exp(BigComplex(-z.im * tp, z.re * tp));
}

BigComplex exp2pii(const Rat& x, long digits) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    const Rat f = x - Rat(fl);
    if (f == 0) return {BigFloat(1.0, digits), BigFloat(digits)};
    if (f == Rat(1, 4)) return {BigFloat(digits), BigFloat(1.0, digits)};
    if (f == Rat(1, 2)) return {BigFloat(-1.0, digits), BigFloat(digits)};
    if (f == Rat(3, 4)) return {BigFloat(digits), BigFloat(-1.0, digits)};
    const BigFloat a = BigFloat::pi(digits) * 2 * BigFloat(f, digits);
    return {cos(a), sin(a)};
}

}  // namespace cft
