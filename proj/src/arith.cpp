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

#include "cft/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cft/error.hpp"

namespace cft {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long euler_phi(long m) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "euler_phi of " + std::to_string(m));
    long result = m;
    for (long p : prime_factors(m)) result = result / p * (p - 1);
    return result;
}

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> divisors(long m) {
    std::vector<long> out;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

std::vector<long> prime_factors(long m) {
    std::vector<long> out;
    long n = std::labs(m);
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Brent's variant; n is odd, composite and not a perfect power of a small prime.
Int pollard_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto step = [&](const Int& v) {
            Int r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out.push_back(n);
        return;
    }
    Int root;
    for (unsigned long k = 2; k < 64; ++k) {
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
            factor_into(root, out);
            return;
        }
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Int(n / d), out);
}

}  // namespace

std::vector<Int> prime_factors(const Int& n_in) {
    if (n_in == 0) fail(ErrorKind::InvalidArgument, "prime_factors of 0");
    Int n = abs(n_in);
    std::vector<Int> out;
    for (unsigned long p = 2; p < 100000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        out.emplace_back(p);
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int radical(const Int& n) {
    Int r = 1;
    for (const auto& p : prime_factors(n)) r *= p;
    return r;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) fail(ErrorKind::InvalidArgument, "not a rational: '" + s + "'");
    if (r.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace cft
