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

#ifndef CFT_BIGFLOAT_HPP
#define CFT_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "cft/arith.hpp"

namespace cft {

constexpr long kMinDigits = 16;

mpfr_prec_t digits_to_bits(long digits);

/// MPFR real carrying its own precision.  Binary operations round to the
/// larger precision of the two operands.
class BigFloat {
public:
    explicit BigFloat(long digits = kMinDigits);
    BigFloat(double v, long digits);
    BigFloat(const Int& v, long digits);
    BigFloat(const Rat& v, long digits);
    BigFloat(const std::string& s, long digits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long digits() const { return digits_; }
    BigFloat with_digits(long digits) const;
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Decimal exponent e with 10^(e-1) <= |x| < 10^e, roughly; very negative for 0.
    long exponent10() const;
    /// Fixed-point decimal string with `sig` significant digits (default: all).
    std::string str(long sig = 0) const;
    /// Scientific notation with `sig` significant digits.
    std::string sci(int sig = 6) const;

    static BigFloat pi(long digits);

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& y);
    BigFloat& operator-=(const BigFloat& y);
    BigFloat& operator*=(const BigFloat& y);
    BigFloat& operator/=(const BigFloat& y);
    BigFloat& operator*=(long y);
    BigFloat& operator/=(long y);

    friend BigFloat operator+(BigFloat x, const BigFloat& y) { return x += y; }
    friend BigFloat operator-(BigFloat x, const BigFloat& y) { return x -= y; }
    friend BigFloat operator*(BigFloat x, const BigFloat& y) { return x *= y; }
    friend BigFloat operator/(BigFloat x, const BigFloat& y) { return x /= y; }
    friend BigFloat operator*(BigFloat x, long y) { return x *= y; }
    friend BigFloat operator/(BigFloat x, long y) { return x /= y; }
    friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return y < x; }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) { return !(y < x); }
    friend bool operator>=(const BigFloat& x, const BigFloat& y) { return !(x < y); }

private:
    void widen(long digits);
    mpfr_t v_;
    long digits_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow10(long e, long digits);
Int round_to_int(const BigFloat& x);

class BigComplex {
public:
    explicit BigComplex(long digits = kMinDigits) : re(digits), im(digits) {}
    BigComplex(BigFloat r, BigFloat i);
    explicit BigComplex(BigFloat r);
    BigComplex(double r, double i, long digits) : re(r, digits), im(i, digits) {}

    BigFloat re, im;

    long digits() const { return std::max(re.digits(), im.digits()); }
    BigComplex with_digits(long digits) const { return {re.with_digits(digits), im.with_digits(digits)}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string str(long sig = 0) const;

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& y);
    BigComplex& operator-=(const BigComplex& y);
    BigComplex& operator*=(const BigComplex& y);
    BigComplex& operator/=(const BigComplex& y);
    BigComplex& operator*=(const BigFloat& y);
    BigComplex& operator*=(long y);

    friend BigComplex operator+(BigComplex x, const BigComplex& y) { return x += y; }
    friend BigComplex operator-(BigComplex x, const BigComplex& y) { return x -= y; }
    friend BigComplex operator*(BigComplex x, const BigComplex& y) { return x *= y; }
    friend BigComplex operator/(BigComplex x, const BigComplex& y) { return x /= y; }
    friend BigComplex operator*(BigComplex x, const BigFloat& y) { return x *= y; }
    friend BigComplex operator*(const BigFloat& y, BigComplex x) { return x *= y; }
    friend BigComplex operator*(BigComplex x, long y) { return x *= y; }
};

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigFloat arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex pow(const BigComplex& z, const BigComplex& w);
/// exp(2 pi i z)
BigComplex exp2pii(const BigComplex& z);
/// exp(2 pi i x) for rational x, exact at multiples of 1/4.
BigComplex exp2pii(const Rat& x, long digits);

}  // namespace cft

#endif  // CFT_BIGFLOAT_HPP
