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

#include "cft/norm_gen.hpp"

#include <algorithm>
#include <string>

#include "cft/error.hpp"
#include "cft/trace_gen.hpp"

namespace cft {

TowerData make_tower(long m, std::vector<SubgroupData> chain) {
    if (chain.size() < 2) fail(ErrorKind::InvalidArgument, "a tower needs at least two subgroups");
    for (const auto& h : chain)
        if (h.m != m) fail(ErrorKind::InvalidArgument, "subgroup of the wrong modulus in tower");
    if (chain.back().size() != 1) fail(ErrorKind::InvalidArgument, "tower must end at the trivial subgroup");
    TowerData t{m, std::move(chain), {}};
    for (size_t k = 1; k < t.chain.size(); ++k) {
        if (!t.chain[k].is_subgroup_of(t.chain[k - 1]))
            fail(ErrorKind::InvalidArgument, "tower step " + std::to_string(k) + " is not a subgroup of its predecessor");
        t.degrees.push_back(static_cast<long>(t.chain[k - 1].size() / t.chain[k].size()));
    }
    return t;
}

std::vector<long> default_exponent_set() { return {1, 2, 3, 4, 5, 6, -1}; }

CycElem power_stable(const CycElem& alpha, const SubgroupData& low, const SubgroupData& high,
                     const std::vector<long>& exponents) {
    if (!is_algebraic_integer(alpha)) fail(ErrorKind::NotAlgebraicInteger, "power_stable input");
    if (!generates(alpha, low, high)) fail(ErrorKind::NotAGenerator, "power_stable input");
    CycElem beta = alpha * Rat(3) + CycElem::rational(alpha.conductor(), 1);
    for (long n : exponents) {
        if (n == 0) fail(ErrorKind::InvalidArgument, "exponent 0 in test set");
        if (!generates(beta.pow(n), low, high))
            fail(ErrorKind::VerificationFailed, "(3a+1)^" + std::to_string(n) + " is not a generator");
    }
    return beta;
}

bool NormGenCertificate::all_passed() const {
    for (const auto& row : passed)
        if (!std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
    return std::all_of(telescoping.begin(), telescoping.end(), [](bool b) { return b; }) && !passed.empty();
}

NormGenCertificate build_norm_element(const TowerData& tower, const std::vector<long>& exponents) {
    if (tower.length() < 1) fail(ErrorKind::InvalidArgument, "tower length must be at least 1");
    const long m = tower.m;
    const auto& h = tower.chain;
    NormGenCertificate cert;
    cert.tower = tower;
    cert.exponents = exponents;

    std::vector<CycElem> prefix;  // prefix[k-1] = beta_1 prod_{s=2}^k beta_s^{d_s} / N(beta_s)
    for (long k = 1; k <= tower.length(); ++k) {
        const auto& low = h[static_cast<size_t>(k)];
        const auto& high = h[static_cast<size_t>(k - 1)];
        const CycElem a = low.size() == high.size() ? CycElem::rational(m, 1) : default_subfield_generator(low);
        CycElem b = low.size() == high.size() ? CycElem::rational(m, 4) : power_stable(a, low, high, exponents);
        CycElem nb = rel_norm(b, high, low);
        if (nb.is_zero()) fail(ErrorKind::DivisionByZero, "vanishing relative norm at step " + std::to_string(k));
        if (k == 1)
            prefix.push_back(b);
        else
            prefix.push_back(prefix.back() * b.pow(tower.degrees[static_cast<size_t>(k - 1)]) / nb);
        cert.step_generators.push_back(std::move(b));
        cert.step_norms.push_back(std::move(nb));
    }
    cert.beta = prefix.back();
    if (cert.beta.is_zero()) fail(ErrorKind::DivisionByZero, "beta vanished");

    for (long k = 2; k <= tower.length(); ++k) {
        const auto& s = static_cast<size_t>(k);
        const CycElem lhs = rel_norm(prefix[s - 1], h[s - 1], h[s]);
        cert.telescoping.push_back(lhs == prefix[s - 2].pow(tower.degrees[s - 1]));
    }

    for (long k = 1; k <= tower.length(); ++k) {
        const CycElem nk = rel_norm(cert.beta, h[static_cast<size_t>(k)]);
        std::vector<bool> row;
        for (long n : exponents) row.push_back(generates(nk.pow(n), h[static_cast<size_t>(k)], h[0]));
        cert.passed.push_back(std::move(row));
    }
    if (!cert.all_passed()) fail(ErrorKind::VerificationFailed, "norm element check failed");
    return cert;
}

}  // namespace cft
