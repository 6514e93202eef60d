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

#ifndef CFT_NORM_GEN_HPP
#define CFT_NORM_GEN_HPP

#include <vector>

#include "cft/cyclotomic.hpp"

namespace cft {

/// L = Fix(H_0) <= Fix(H_1) <= ... <= Fix(H_t) = Q(zeta_m).
struct TowerData {
    long m = 0;
    std::vector<SubgroupData> chain;  // H_0 >= H_1 >= ... >= H_t = {1}
    std::vector<long> degrees;        // degrees[k-1] = [H_{k-1} : H_k]

    long length() const { return static_cast<long>(chain.size()) - 1; }
};

/// Validates the chain and fills in the step degrees.  Equal neighbours are
/// allowed (degree 1).
TowerData make_tower(long m, std::vector<SubgroupData> chain);

std::vector<long> default_exponent_set();  // {1,...,6,-1}

/// 3*alpha + 1, after checking that each listed power of it generates
/// Fix(low) over Fix(high).
CycElem power_stable(const CycElem& alpha, const SubgroupData& low, const SubgroupData& high,
                     const std::vector<long>& exponents = default_exponent_set());

struct NormGenCertificate {
    TowerData tower;
    std::vector<CycElem> step_generators;  // beta_1..beta_t
    std::vector<CycElem> step_norms;       // N_{F_s/F_{s-1}}(beta_s), s = 1..t
    CycElem beta;
    std::vector<long> exponents;
    std::vector<std::vector<bool>> passed;  // [k-1][index of n]
    std::vector<bool> telescoping;          // s = 2..t

    bool all_passed() const;
};

NormGenCertificate build_norm_element(const TowerData& tower,
                                      const std::vector<long>& exponents = default_exponent_set());

}  // namespace cft

#endif  // CFT_NORM_GEN_HPP
