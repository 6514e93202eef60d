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

#ifndef CFT_TRACE_GEN_HPP
#define CFT_TRACE_GEN_HPP

#include <optional>
#include <vector>

#include "cft/cyclotomic.hpp"

namespace cft {

/// An algebraic-integer generator of Fix(h) over Q.  Tries the Gaussian
/// period sum_{a in h} zeta^a first, then periods of other powers of zeta,
/// then two-term integer combinations of periods; every candidate is checked
/// with generates().  Throws GeneratorSearchExhausted after retry_budget
/// candidates.
CycElem default_subfield_generator(const SubgroupData& h, int retry_budget = 256);

struct TraceBudget {
    Int value;    // [U:Q] * prod |N(disc(alpha_i))|
    Int radical;  // product of the distinct primes of value
    std::vector<Rat> discriminants;
};

/// Exact budget for generators[i] of Fix(subgroups[i]).  Throws
/// NotAlgebraicInteger or NotAGenerator when an input is unsuitable.
TraceBudget trace_budget(long m, const std::vector<SubgroupData>& subgroups, const std::vector<CycElem>& generators);

struct TraceGenCertificate {
    long m = 0;
    std::vector<SubgroupData> subgroups;  // one per intermediate field, U itself included
    std::vector<CycElem> generators;
    TraceBudget budget;
    bool use_radical = true;
    Int coprime_input;  // the N' fed to the coprime sequence
    std::vector<Int> denominators;
    CycElem alpha;
    std::vector<CycElem> traces;  // Tr_{U/F_i}(alpha)
    std::vector<bool> passed;

    bool all_passed() const;
};

/// Builds alpha = sum alpha_i / M_i and checks that every relative trace
/// generates its field.  `budget_override`, when given, replaces N' and must
/// be divisible by every prime factor of the exact budget.  A failing check
/// raises VerificationFailed carrying the offending subgroup.
TraceGenCertificate build_trace_generator(long m, bool use_radical = true, int retry_budget = 256,
                                          const std::optional<Int>& budget_override = std::nullopt);

}  // namespace cft

#endif  // CFT_TRACE_GEN_HPP
