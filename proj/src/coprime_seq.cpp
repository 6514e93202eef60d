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

#include "cft/coprime_seq.hpp"

#include <string>

#include "cft/error.hpp"

namespace cft {

CoprimeSeq coprime_seq(const std::vector<Int>& n_list) {
    if (n_list.empty()) fail(ErrorKind::EmptyInput, "coprime_seq needs at least one input");
    CoprimeSeq seq{n_list, {}};
    seq.outputs.reserve(n_list.size());
    Int product = 1;
    for (const Int& n : n_list) {
        if (n < 0) fail(ErrorKind::InvalidArgument, "negative input " + n.get_str());
        Int m = 1 + n * product;
        product *= m;
        seq.outputs.push_back(std::move(m));
    }
    verify_coprime_properties(seq);
    return seq;
}

void verify_coprime_properties(const CoprimeSeq& seq) {
    const auto& n = seq.inputs;
    const auto& m = seq.outputs;
    if (n.size() != m.size()) fail(ErrorKind::VerificationFailed, "length mismatch");
    Int g;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 1 + n[i]) fail(ErrorKind::VerificationFailed, "M_" + std::to_string(i + 1) + " < 1 + N_i");
        mpz_gcd(g.get_mpz_t(), m[i].get_mpz_t(), n[i].get_mpz_t());
        if (g != 1) fail(ErrorKind::VerificationFailed, "gcd(M_i, N_i) != 1 at i = " + std::to_string(i + 1));
        for (size_t j = i + 1; j < m.size(); ++j) {
            mpz_gcd(g.get_mpz_t(), m[i].get_mpz_t(), m[j].get_mpz_t());
            if (g != 1)
                fail(ErrorKind::VerificationFailed,
                     "M_" + std::to_string(i + 1) + " and M_" + std::to_string(j + 1) + " share a factor");
        }
    }
}

}  // namespace cft
