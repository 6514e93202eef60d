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

#include "cft/trace_gen.hpp"

#include <algorithm>
#include <string>

#include "cft/coprime_seq.hpp"
#include "cft/error.hpp"

namespace cft {

namespace {

std::string describe(const SubgroupData& h) {
    std::string s = "{";
    for (size_t i = 0; i < h.elements.size(); ++i) s += (i ? "," : "") + std::to_string(h.elements[i]);
    return s + "} mod " + std::to_string(h.m);
}

}  // namespace

CycElem default_subfield_generator(const SubgroupData& h, int retry_budget) {
    const long m = h.m;
    const auto g = full_group(m);
    if (h.size() >= g.size()) fail(ErrorKind::InvalidArgument, "subgroup " + describe(h) + " is not proper");

    std::vector<CycElem> periods;  // Tr_h(zeta^k), k = 1..m-1, units first
    for (long k : coset_representatives(g, h)) periods.push_back(rel_trace(CycElem::zeta(m, k), h));
    for (long k = 2; k < m; ++k)
        if (gcd_long(k, m) != 1) periods.push_back(rel_trace(CycElem::zeta(m, k), h));

    int tried = 0;
    auto accept = [&](const CycElem& x) {
        ++tried;
        return !x.is_zero() && generates(x, h, g) && is_algebraic_integer(x);
    };
    for (const auto& p : periods) {
        if (tried >= retry_budget) break;
        if (accept(p)) return p;
    }
    for (long c = 1; c <= 3; ++c)
        for (size_t i = 0; i < periods.size(); ++i)
            for (size_t j = i + 1; j < periods.size(); ++j) {
                if (tried >= retry_budget) goto exhausted;
                const CycElem x = periods[i] + periods[j] * Rat(c);
                if (accept(x)) return x;
            }
exhausted:
    fail(ErrorKind::GeneratorSearchExhausted,
         "no generator of Fix(" + describe(h) + ") after " + std::to_string(tried) + " candidates");
}

TraceBudget trace_budget(long m, const std::vector<SubgroupData>& subgroups, const std::vector<CycElem>& generators) {
    if (subgroups.size() != generators.size())
        fail(ErrorKind::InvalidArgument, "one generator per subgroup is required");
    const auto g = full_group(m);
    TraceBudget b{Int(g.size()), 1, {}};
    for (size_t i = 0; i < subgroups.size(); ++i) {
        if (!is_algebraic_integer(generators[i]))
            fail(ErrorKind::NotAlgebraicInteger, "generator for " + describe(subgroups[i]));
        const Rat disc = rel_discriminant(generators[i], subgroups[i], g);
        if (disc.get_den() != 1)
            fail(ErrorKind::VerificationFailed, "non-integral discriminant for " + describe(subgroups[i]));
        b.discriminants.push_back(disc);
        b.value *= disc.get_num();
    }
    // factor piecewise: each discriminant is far easier than the product
    std::vector<Int> primes = prime_factors(Int(g.size()));
    for (const auto& d : b.discriminants)
        for (auto& p : prime_factors(d.get_num())) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes) b.radical *= p;
    return b;
}

bool TraceGenCertificate::all_passed() const {
    return !passed.empty() && std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
}

TraceGenCertificate build_trace_generator(long m, bool use_radical, int retry_budget,
                                          const std::optional<Int>& budget_override) {
    const auto g = full_group(m);
    TraceGenCertificate cert;
    cert.m = m;
    cert.use_radical = use_radical;
    cert.subgroups = subgroup_lattice(m);
    for (const auto& h : cert.subgroups) cert.generators.push_back(default_subfield_generator(h, retry_budget));
    cert.budget = trace_budget(m, cert.subgroups, cert.generators);

    if (budget_override) {
        if (*budget_override <= 0 || *budget_override % cert.budget.radical != 0)
            fail(ErrorKind::InvalidArgument,
                 "budget " + budget_override->get_str() + " is not a multiple of radical(N) = " +
                     cert.budget.radical.get_str());
        cert.coprime_input = *budget_override;
    } else {
        cert.coprime_input = use_radical ? cert.budget.radical : cert.budget.value;
    }
    cert.denominators =
        coprime_seq(std::vector<Int>(cert.subgroups.size(), cert.coprime_input)).outputs;

    cert.alpha = CycElem(m);
    for (size_t i = 0; i < cert.generators.size(); ++i)
        cert.alpha += cert.generators[i] * Rat(Int(1), cert.denominators[i]);

    for (const auto& h : cert.subgroups) {
        CycElem t = rel_trace(cert.alpha, h);
        const bool ok = generates(t, h, g);
        cert.traces.push_back(std::move(t));
        cert.passed.push_back(ok);
        if (!ok) fail(ErrorKind::VerificationFailed, "Tr(alpha) does not generate Fix(" + describe(h) + ")");
    }
    return cert;
}

}  // namespace cft
