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
// cft: command-line front end.  Every subcommand writes one JSON report
// (stdout, or the --json path) and exits 0 when all checks passed, 1 on a
// failed verification and 2 on a usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cft/acceptance.hpp"
#include "cft/config.hpp"
#include "cft/error.hpp"
#include "cft/report.hpp"

using namespace cft;

namespace {

constexpr int kExitOk = 0, kExitFailed = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_usage_kind(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::DegenerateExtension:
        case ErrorKind::UnsupportedDiscriminant:
        case ErrorKind::EmptyInput:
        case ErrorKind::LevelMismatch:
        case ErrorKind::IndexCollision:
        case ErrorKind::LatticePoint:
        case ErrorKind::NotAlgebraicInteger:
        case ErrorKind::NotAGenerator:
            return true;
        default:
            return false;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw std::invalid_argument(s);
        return r;
    } catch (const std::exception&) {
        throw UsageError("bad rational '" + s + "'");
    }
}

// "p/q" is taken exactly, anything else as a decimal.
BigFloat parse_real(const std::string& s, long digits) {
    if (s.find('/') != std::string::npos) return BigFloat(parse_rat(s), digits);
    return BigFloat(s, digits);
}

// Shared by every subcommand.
struct Common {
    std::string config_path, json_path;
    std::optional<long> prec;
    bool timings = false;
    RunConfig cfg;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "key=value configuration file");
        app->add_option("--prec", prec, "precision in decimal digits");
        app->add_option("--json", json_path, "write the report here instead of stdout");
        app->add_flag("--timings", timings, "add a timings section to the report");
    }

    // defaults < CFT_PRECISION < --config < flags
    void resolve() {
        apply_environment(cfg);
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        if (prec) apply_setting(cfg, "precision", std::to_string(*prec));
        if (timings) cfg.timings = true;
        if (!json_path.empty()) cfg.output = json_path;
    }
};

struct Run {
    Run() = default;
    explicit Run(std::string cmd) : command(std::move(cmd)) {}
    std::string command;
    Json inputs = Json::object();
    Json result;
    bool passed = false;
};

int emit(const Run& run, const Common& c, double seconds) {
    Json report;
    report["command"] = run.command;
    report["inputs"] = run.inputs;
    report["config"] = to_json(c.cfg);
    report["result"] = run.result;
    report["passed"] = run.passed;
    if (c.cfg.timings) report["timings"] = {{"seconds", seconds}};
    const std::string text = report.dump(2) + "\n";
    if (c.cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.cfg.output);
        if (!out) throw UsageError("cannot write '" + c.cfg.output + "'");
        out << text;
    }
    return run.passed ? kExitOk : kExitFailed;
}

SubgroupData parse_subgroup(long m, const std::string& gens) {
    std::vector<long> g;
    for (const auto& s : split(gens, ':'))
        if (!s.empty()) g.push_back(parse_long_list(s).front());
    for (long& x : g) x = mod_floor(x, m);
    return subgroup_generated_by(m, g);
}

// ------------------------------------------------------------- commands

struct TraceGenArgs {
    long conductor = 0;
    bool raw_budget = false;
    std::string budget;
};

void cmd_trace_gen(Run& run, const TraceGenArgs& a, const RunConfig& cfg) {
    run.command = "trace-gen";
    run.inputs = {{"conductor", a.conductor}, {"raw_budget", a.raw_budget}};
    std::optional<Int> budget;
    if (!a.budget.empty()) {
        budget = Int(a.budget);
        run.inputs["budget"] = a.budget;
    }
    const auto cert = build_trace_generator(a.conductor, !a.raw_budget, cfg.retry_budget, budget);
    run.result = to_json(cert);
    run.passed = cert.all_passed();
}

struct NormGenArgs {
    long conductor = 0;
    std::string tower, n_set;
};

void cmd_norm_gen(Run& run, const NormGenArgs& a, RunConfig& cfg) {
    run.command = "norm-gen";
    if (!a.n_set.empty()) cfg.n_set = parse_long_list(a.n_set);
    std::vector<SubgroupData> chain;
    if (a.tower.empty()) {
        chain = {full_group(a.conductor), trivial_subgroup(a.conductor)};
    } else {
        for (const auto& s : split(a.tower, ',')) chain.push_back(parse_subgroup(a.conductor, s));
    }
    run.inputs = {{"conductor", a.conductor}, {"tower", a.tower.empty() ? "G,1" : a.tower}, {"n_set", cfg.n_set}};
    const auto cert = build_norm_element(make_tower(a.conductor, chain), cfg.n_set);
    run.result = to_json(cert);
    run.passed = cert.all_passed();
}

struct NormalArgs {
    long conductor = 0;
    std::string alpha_coeffs;
};

void cmd_normal(Run& run, const NormalArgs& a, const RunConfig& cfg) {
    run.command = "normal-element";
    CycElem alpha = CycElem::zeta(a.conductor);
    if (!a.alpha_coeffs.empty()) {
        std::vector<Rat> c;
        for (const auto& s : split(a.alpha_coeffs, ',')) c.push_back(parse_rat(s));
        if (static_cast<long>(c.size()) != euler_phi(a.conductor))
            throw UsageError("--alpha-coeffs needs phi(m) = " + std::to_string(euler_phi(a.conductor)) + " entries");
        alpha = CycElem(a.conductor, c);
    }
    run.inputs = {{"conductor", a.conductor}, {"alpha", to_json(alpha)}};
    const auto cert = build_normal_element(alpha, cfg.size_guard_digits);
    run.result = to_json(cert);
    run.passed = cert.all_passed();
}

struct ModfunArgs {
    std::string fn, tau, index = "0,1,2", index2, eta_norm = "scaled";
    std::optional<long> tau_dk;
    long p = 3, m = 2;
};

FracIndex parse_index(const std::string& s) {
    const auto v = parse_long_list(s);
    if (v.size() != 3) throw UsageError("an index is a,b,N");
    return FracIndex::make(v[0], v[1], v[2]);
}

void cmd_modfun(Run& run, const ModfunArgs& a, const RunConfig& cfg) {
    run.command = "modfun";
    const EvalConfig ec = cfg.eval();
    const long w = ec.digits + ec.guard;
    std::optional<TauPoint> tau;
    if (a.tau_dk) {
        tau = imag_quad(*a.tau_dk).theta(w);
        run.inputs["tau"] = "theta(" + std::to_string(*a.tau_dk) + ")";
    } else {
        if (a.tau.empty()) throw UsageError("--tau RE,IM or --tau-dk D is required");
        const auto parts = split(a.tau, ',');
        if (parts.size() != 2) throw UsageError("--tau takes RE,IM");
        tau = TauPoint(BigComplex(parse_real(parts[0], w), parse_real(parts[1], w)));
        run.inputs["tau"] = a.tau;
    }
    run.inputs["fn"] = a.fn;
    EtaNorm norm;
    if (a.eta_norm == "scaled") norm = EtaNorm::Scaled;
    else if (a.eta_norm == "classical") norm = EtaNorm::Classical;
    else throw UsageError("--eta-norm is scaled or classical");

    run.passed = true;
    if (a.fn == "eta") {
        run.inputs["eta_norm"] = a.eta_norm;
        run.result = {{"value", to_json(eta(*tau, norm, ec))}};
    } else if (a.fn == "j") {
        run.result = {{"value", to_json(eisenstein(*tau, ec).j)}};
    } else if (a.fn == "siegel" || a.fn == "wp" || a.fn == "fricke") {
        const auto idx = parse_index(a.index);
        run.inputs["index"] = {idx.a, idx.b, idx.N};
        const auto v = a.fn == "siegel" ? siegel_g(idx, *tau, ec)
                       : a.fn == "wp"   ? wp_value(idx, *tau, ec)
                                        : fricke_f(idx, *tau, ec);
        run.result = {{"value", to_json(v)}};
    } else if (a.fn == "fm") {
        run.inputs["p"] = a.p;
        run.inputs["m"] = a.m;
        run.result = to_json(fm_func(a.p, a.m, *tau, ec));
    } else if (a.fn == "ptog") {
        const auto i1 = parse_index(a.index);
        if (a.index2.empty()) throw UsageError("--fn ptog needs --index2");
        const auto i2 = parse_index(a.index2);
        run.inputs["index"] = {i1.a, i1.b, i1.N};
        run.inputs["index2"] = {i2.a, i2.b, i2.N};
        run.inputs["eta_norm"] = a.eta_norm;
        const auto r = check_ptog(i1, i2, *tau, norm, ec);
        const long tol = std::max<long>(ec.digits - 28, 4);
        run.result = to_json(r);
        run.result["tolerance_digits"] = tol;
        run.passed = r.residual < pow10(-tol, ec.digits);
    } else {
        throw UsageError("unknown --fn '" + a.fn + "'");
    }
}

struct CmArgs {
    long dk = -7, level = 3, p = 3, n = 2;
    std::string fn, levels = "3,9", exponents = "1,2", dks;
    bool recognize = false;
};

void cmd_cm(Run& run, const std::string& what, const CmArgs& a, const RunConfig& cfg) {
    if (cfg.precision < 32) throw UsageError("cm subcommands need precision >= 32");
    run.command = "cm " + what;
    const CmConfig cc = cfg.cm();
    run.passed = true;
    if (what == "degrees") {
        const auto K = imag_quad(a.dk);
        const auto w = enumerate_W(K, a.level);
        run.inputs = {{"dk", a.dk}, {"level", a.level}};
        Json reps = Json::array();
        for (const auto& g : w.reps()) reps.push_back(to_json(g));
        run.result = {{"order", w.order()}, {"quotient", w.quotient_order()}, {"representatives", reps}};
    } else if (what == "conjugates") {
        const auto K = imag_quad(a.dk);
        const auto fn = a.fn.empty() ? ModExpr::siegel12n(FracIndex::make(0, 1, a.level)) : ModExpr::parse(a.fn);
        run.inputs = {{"dk", a.dk}, {"level", a.level}, {"fn", fn.str()}};
        AtomCache cache(K.theta(cc.eval.digits + cc.eval.guard), cc.eval);
        const auto conj = cm_conjugates(fn, enumerate_W(K, a.level), cache);
        run.result["conjugates"] = to_json(conj);
        run.result["separation"] = residual_json(min_relative_separation(conj));
        if (a.recognize) {
            const auto poly = recognize_alg_int(conj, cc.recognition_digits);
            run.result["polynomial"] = to_json(poly);
        }
    } else if (what == "thm36") {
        run.inputs = {{"dk", a.dk}, {"p", a.p}, {"n", a.n}};
        const auto r = verify_trace_tower(imag_quad(a.dk), a.p, a.n, cc);
        run.result = to_json(r);
        run.passed = r.all_passed();
    } else if (what == "rama") {
        const auto levels = parse_long_list(a.levels), exps = parse_long_list(a.exponents);
        run.inputs = {{"dk", a.dk}, {"levels", levels}, {"exponents", exps}};
        const auto r = rama_beta(imag_quad(a.dk), levels, exps, cc);
        run.result = to_json(r);
        run.passed = r.all_passed();
    } else if (what == "normal") {
        run.inputs = {{"dk", a.dk}, {"level", a.level}};
        const auto r = normal_element_cm(imag_quad(a.dk), a.level, cc);
        run.result = to_json(r);
        run.passed = r.all_passed();
    } else if (what == "probe") {
        const auto fn = a.fn.empty() ? ModExpr::siegel12n(FracIndex::make(0, 1, 3)) : ModExpr::parse(a.fn);
        const auto dks = a.dks.empty() ? supported_discriminants() : parse_long_list(a.dks);
        run.inputs = {{"fn", fn.str()}, {"dks", dks}};
        const auto pts = integrality_probe(fn, dks, cc);
        run.result["points"] = to_json(pts);
        for (const auto& p : pts) run.passed = run.passed && p.integral;
    }
}

void cmd_verify_all(Run& run, const std::string& criteria, const RunConfig& cfg) {
    run.command = "verify-all";
    std::vector<int> ids;
    if (!criteria.empty())
        for (long x : parse_long_list(criteria)) ids.push_back(static_cast<int>(x));
    run.inputs["criteria"] = ids;
    const auto results = run_acceptance(cfg, ids);
    for (const auto& r : results)
        std::fprintf(stderr, "criterion %2d: %s  %s\n", r.id, r.passed() ? "PASS" : "FAIL",
                     r.passed() ? r.title.c_str() : r.detail.c_str());
    run.result = acceptance_json(results, cfg);
    run.passed = run.result["passed"].get<bool>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit generators of abelian extensions: exact cyclotomic and CM constructions"};
    app.require_subcommand(1);
    Common common;

    TraceGenArgs tg;
    auto* trace = app.add_subcommand("trace-gen", "primitive element whose traces generate every subfield");
    trace->add_option("--conductor", tg.conductor, "cyclotomic conductor m")->required();
    trace->add_flag("--raw-budget", tg.raw_budget, "feed the full budget, not its radical, to the coprime sequence");
    trace->add_option("--budget", tg.budget, "override the coprime-sequence input");
    common.attach(trace);

    NormGenArgs ng;
    auto* normgen = app.add_subcommand("norm-gen", "element whose relative norms generate along a tower");
    normgen->add_option("--conductor", ng.conductor, "cyclotomic conductor m")->required();
    normgen->add_option("--tower", ng.tower, "H0,H1,...,Ht with generators of each subgroup joined by ':'");
    normgen->add_option("--n-set", ng.n_set, "exponents to test, e.g. 1,2,3");
    common.attach(normgen);

    NormalArgs ne;
    auto* normal = app.add_subcommand("normal-element", "normal basis generator of Q(zeta_m)/Q");
    normal->add_option("--conductor", ne.conductor, "cyclotomic conductor m")->required();
    normal->add_option("--alpha-coeffs", ne.alpha_coeffs, "power-basis coordinates of alpha (p/q,...)");
    common.attach(normal);

    ModfunArgs mf;
    auto* modfun = app.add_subcommand("modfun", "evaluate a modular function");
    modfun->add_option("--fn", mf.fn, "eta, siegel, wp, fricke, fm, j or ptog")->required();
    modfun->add_option("--tau", mf.tau, "RE,IM (decimal or p/q)");
    modfun->add_option("--tau-dk", mf.tau_dk, "use theta_K for this discriminant");
    modfun->add_option("--index", mf.index, "a,b,N for [a/N; b/N]");
    modfun->add_option("--index2", mf.index2, "second index for ptog");
    modfun->add_option("--eta-norm", mf.eta_norm, "scaled or classical");
    modfun->add_option("--p", mf.p, "odd prime for fm");
    modfun->add_option("--m", mf.m, "exponent for fm");
    common.attach(modfun);

    CmArgs cm;
    std::string cm_what;
    auto* cmcmd = app.add_subcommand("cm", "CM values and Shimura reciprocity");
    cmcmd->add_option("what", cm_what, "degrees, conjugates, thm36, rama, normal or probe")
        ->required()
        ->check(CLI::IsMember({"degrees", "conjugates", "thm36", "rama", "normal", "probe"}));
    cmcmd->add_option("--dk", cm.dk, "fundamental discriminant");
    cmcmd->add_option("--level", cm.level, "level N");
    cmcmd->add_option("--p", cm.p, "prime p");
    cmcmd->add_option("--n", cm.n, "tower height n");
    cmcmd->add_option("--fn", cm.fn, "modular function, e.g. g12N(0,1,3)^2*j");
    cmcmd->add_option("--levels", cm.levels, "level chain, e.g. 3,9");
    cmcmd->add_option("--exponents", cm.exponents, "exponents to test, e.g. 1,2");
    cmcmd->add_option("--dks", cm.dks, "discriminants to probe");
    cmcmd->add_flag("--recognize", cm.recognize, "recognize the conjugate polynomial");
    common.attach(cmcmd);

    std::string criteria;
    auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
    verify->add_option("--criteria", criteria, "subset, e.g. 1,5,12");
    common.attach(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Run run;
    try {
        common.resolve();
        RunConfig& cfg = common.cfg;
        if (*trace) cmd_trace_gen(run, tg, cfg);
        else if (*normgen) cmd_norm_gen(run, ng, cfg);
        else if (*normal) cmd_normal(run, ne, cfg);
        else if (*modfun) cmd_modfun(run, mf, cfg);
        else if (*cmcmd) cmd_cm(run, cm_what, cm, cfg);
        else cmd_verify_all(run, criteria, cfg);
    } catch (const UsageError& e) {
        std::cerr << "cft: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "cft: " << e.what() << "\n";
        if (is_usage_kind(e.kind())) return kExitUsage;
        run.result = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        run.passed = false;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
        return emit(run, common, seconds);
    } catch (const UsageError& e) {
        std::cerr << "cft: " << e.what() << "\n";
        return kExitUsage;
    }
}
