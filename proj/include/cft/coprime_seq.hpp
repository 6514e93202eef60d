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

#ifndef CFT_COPRIME_SEQ_HPP
#define CFT_COPRIME_SEQ_HPP

#include <vector>

#include "cft/arith.hpp"

namespace cft {

/// Denominators M_i built from N_i by M_i = 1 + N_i * M_1 * ... * M_{i-1}.
/// Guarantees M_i >= 1 + N_i, gcd(M_i, N_i) = 1 and pairwise coprime M_i.
struct CoprimeSeq {
    std::vector<Int> inputs;
    std::vector<Int> outputs;
};

/// Throws EmptyInput for an empty list and InvalidArgument for negative N_i.
/// The three properties are verified before returning.
CoprimeSeq coprime_seq(const std::vector<Int>& n_list);

/// Re-checks the three properties; throws VerificationFailed on violation.
void verify_coprime_properties(const CoprimeSeq& seq);

}  // namespace cft

#endif  // CFT_COPRIME_SEQ_HPP
