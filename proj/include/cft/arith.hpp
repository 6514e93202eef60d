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

#ifndef CFT_ARITH_HPP
#define CFT_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cft {

using Int = mpz_class;
using Rat = mpq_class;

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_floor(long a, long m);
long euler_phi(long m);
bool is_prime_long(long n);
std::vector<long> divisors(long m);
std::vector<long> prime_factors(long m);

/// Distinct prime factors of |n| (n != 0), ascending.  Trial division
/// followed by Pollard rho for whatever is left.
std::vector<Int> prime_factors(const Int& n);

/// Product of the distinct primes dividing n; radical(1) = 1.
Int radical(const Int& n);

/// "p/q" or "p" when q = 1.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace cft

#endif  // CFT_ARITH_HPP
