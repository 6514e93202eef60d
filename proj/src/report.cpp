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

#include "cft/report.hpp"

namespace cft {

namespace {

Json residuals(const std::vector<BigFloat>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(residual_json(x));
    return a;
}

}  // namespace

Json to_json(const Int& x) { return x.get_str(); }
Json to_json(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

Json to_json(const CycElem& x) {
    Json j;
    j["m"] = x.conductor();
    j["coeffs"] = to_json(x.coeffs());
    return j;
}

Json to_json(const SubgroupData& h) {
    Json j;
    j["m"] = h.m;
    j["elements"] = h.elements;
    return j;
}

Json to_json(const BigComplex& z) {
    Json j;
    j["re"] = z.re.str();
    j["im"] = z.im.str();
    return j;
}

Json residual_json(const BigFloat& x) { return x.sci(6); }

Json to_json(const CoprimeSeq& s) {
    Json j;
    j["inputs"] = to_json(s.inputs);
    j["outputs"] = to_json(s.outputs);
    return j;
}

Json to_json(const TraceGenCertificate& c) {
    Json j;
    j["conductor"] = c.m;
    j["use_radical"] = c.use_radical;
    Json fields = Json::array();
    for (size_t i = 0; i < c.subgroups.size(); ++i) {
        Json f;
        f["subgroup"] = to_json(c.subgroups[i]);
        f["generator"] = to_json(c.generators[i]);
        f["discriminant"] = to_json(c.budget.discriminants[i]);
        f["denominator"] = to_json(c.denominators[i]);
        f["trace"] = to_json(c.traces[i]);
        f["passed"] = static_cast<bool>(c.passed[i]);
        fields.push_back(std::move(f));
    }
    j["budget"] = to_json(c.budget.value);
    j["radical"] = to_json(c.budget.radical);
    j["coprime_input"] = to_json(c.coprime_input);
    j["denominators"] = to_json(c.denominators);
    j["alpha"] = to_json(c.alpha);
    j["fields"] = std::move(fields);
    j["passed"] = c.all_passed();
    return j;
}

Json to_json(const NormGenCertificate& c) {
    Json j;
    j["conductor"] = c.tower.m;
    j["tower"] = to_json(c.tower.chain);
    j["degrees"] = c.tower.degrees;
    j["exponents"] = c.exponents;
    Json steps = Json::array();
    for (size_t k = 0; k < c.step_generators.size(); ++k) {
        Json s;
        s["step"] = k + 1;
        s["generator"] = to_json(c.step_generators[k]);
        s["norm"] = to_json(c.step_norms[k]);
        Json p = Json::object();
        for (size_t i = 0; i < c.exponents.size(); ++i) p[std::to_string(c.exponents[i])] = static_cast<bool>(c.passed[k][i]);
        s["power_generates"] = std::move(p);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    Json tel = Json::array();
    for (bool b : c.telescoping) tel.push_back(b);
    j["telescoping"] = std::move(tel);
    j["beta"] = to_json(c.beta);
    j["passed"] = c.all_passed();
    return j;
}

Json to_json(const NormalElemCertificate& c) {
    Json j;
    j["conductor"] = c.m;
    j["alpha"] = to_json(c.alpha);
    j["group"] = c.table.elements;
    j["characters"] = c.table.exponents.values;
    const size_t d = c.table.size();
    Json rows = Json::array();
    for (size_t t = 0; t < d; ++t) {
        Json row = Json::array();
        for (size_t i = 0; i < d; ++i) {
            Json e;
            e["chi"] = i;
            e["S"] = to_json(c.sums[t * d + i]);
            e["norm"] = to_json(c.norms[t * d + i]);
            e["M"] = to_json(c.denominators[t * d + i]);
            row.push_back(std::move(e));
        }
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    j["first_nonvanishing"] = c.first_nonvanishing;
    j["conjugates_distinct"] = c.conjugates_distinct;
    j["beta"] = to_json(c.beta);
    j["normal"] = c.normal;
    j["normal_by_rank"] = c.normal_by_rank;
    j["warnings"] = c.warnings;
    j["passed"] = c.all_passed();
    return j;
}

Json to_json(const FmValue& v) {
    Json j;
    j["ratio"] = to_json(v.ratio);
    j["product"] = to_json(v.product);
    j["residual"] = residual_json(v.residual);
    return j;
}

Json to_json(const PtogResult& r) {
    Json j;
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["residual"] = residual_json(r.residual);
    return j;
}

Json to_json(const WMatrix& g) { return Json::array({Json::array({g.a(), g.b()}), Json::array({g.c(), g.d()})}); }

Json to_json(const RecognizedPoly& p) {
    Json j;
    j["coeffs"] = to_json(p.coeffs);
    j["residual"] = residual_json(p.residual);
    j["conjugated"] = p.conjugated;
    return j;
}

Json to_json(const TraceTowerReport& r) {
    Json j;
    j["dk"] = r.dk;
    j["p"] = r.p;
    j["n"] = r.n;
    j["M"] = to_json(r.M);
    j["alpha"] = to_json(r.alpha);
    j["fm_residuals"] = residuals(r.fm_residuals);
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json e;
        e["m"] = l.m;
        e["degree"] = l.degree;
        e["traces"] = to_json(l.traces);
        e["separation"] = residual_json(l.separation);
        e["passed"] = l.passed;
        levels.push_back(std::move(e));
    }
    j["levels"] = std::move(levels);
    j["passed"] = r.all_passed();
    return j;
}

Json to_json(const RamaReport& r) {
    Json j;
    j["dk"] = r.dk;
    j["levels"] = r.levels;
    j["step_degrees"] = r.step_degrees;
    j["denominator_norms"] = to_json(r.denominator_norms);
    j["beta"] = to_json(r.beta);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["k"] = c.k;
        e["N"] = c.N;
        e["n"] = c.n;
        e["degree"] = c.degree;
        e["separation"] = residual_json(c.separation);
        e["passed"] = c.passed;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["passed"] = r.all_passed();
    return j;
}

Json to_json(const NormalCmReport& r) {
    Json j;
    j["dk"] = r.dk;
    j["level"] = r.N;
    j["degree"] = r.d;
    j["digits_used"] = r.digits_used;
    j["characters"] = r.characters.values;
    j["norms"] = to_json(r.norms);
    j["denominators"] = to_json(r.denominators);
    j["coefficients"] = to_json(r.coefficients);
    j["criterion"] = residuals(r.criterion);
    j["normal"] = r.normal;
    j["passed"] = r.all_passed();
    return j;
}

Json to_json(const ProbePoint& p) {
    Json j;
    j["dk"] = p.dk;
    j["integral"] = p.integral;
    j["poly"] = p.poly ? to_json(*p.poly) : Json();
    if (!p.error.empty()) j["error"] = p.error;
    return j;
}

Json to_json(const RunConfig& cfg) {
    Json j;
    j["precision"] = cfg.precision;
    j["guard"] = cfg.guard;
    j["max_terms"] = cfg.max_terms;
    j["n_set"] = cfg.n_set;
    j["retry_budget"] = cfg.retry_budget;
    j["separation_digits"] = cfg.cm().separation();
    j["recognition_digits"] = cfg.recognition_digits;
    j["size_guard_digits"] = cfg.size_guard_digits;
    return j;
}

}  // namespace cft
