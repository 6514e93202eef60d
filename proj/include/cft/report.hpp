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

#ifndef CFT_REPORT_HPP
#define CFT_REPORT_HPP

// JSON views of certificates.  Numbers are strings: "p/q" for rationals,
// decimal for integers, fixed-point for complex values, scientific for
// residuals and separations.

#include "json.hpp"

#include "cft/cm.hpp"
#include "cft/config.hpp"
#include "cft/coprime_seq.hpp"
#include "cft/modfunc.hpp"
#include "cft/norm_gen.hpp"
#include "cft/normal_elem.hpp"
#include "cft/trace_gen.hpp"

namespace cft {

using Json = nlohmann::ordered_json;

Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const CycElem& x);
Json to_json(const SubgroupData& h);
Json to_json(const BigComplex& z);
Json residual_json(const BigFloat& x);

template <class T>
Json to_json(const std::vector<T>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

Json to_json(const CoprimeSeq& s);
Json to_json(const TraceGenCertificate& c);
Json to_json(const NormGenCertificate& c);
Json to_json(const NormalElemCertificate& c);
Json to_json(const FmValue& v);
Json to_json(const PtogResult& r);
Json to_json(const WMatrix& g);
Json to_json(const RecognizedPoly& p);
Json to_json(const TraceTowerReport& r);
Json to_json(const RamaReport& r);
Json to_json(const NormalCmReport& r);
Json to_json(const ProbePoint& p);
Json to_json(const RunConfig& cfg);

}  // namespace cft

#endif  // CFT_REPORT_HPP
