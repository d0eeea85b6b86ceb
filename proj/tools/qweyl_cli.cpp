// qweyl: exact engine for the quantum birational Weyl group actions, the
// fundamental polynomials, the associated quantum curves, and the bilinear
// tau system.  Subcommands mirror the verification suites; every stochastic
// run records its seed and identical configurations produce identical bytes.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "qweyl/pretty.hpp"
#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

struct GlobalOpts {
    std::string type = "e8";
    uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    int jobs = 1;
};

GroupType parse_type_or_throw(const std::string& s) {
    auto t = parse_group(s);
    if (!t) throw engine_error("expected --type one of e8, e7, e6, d5");
    return *t;
}

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> word;
    std::string cur;
    for (char ch : s + " ") {
        if (ch == ' ' || ch == ',' || ch == '\t') {
            if (!cur.empty()) {
                word.push_back(std::stoi(cur));
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    return word;
}

void emit(const GlobalOpts& g, const Json& report, const std::string& pretty) {
    std::string text = g.format == "pretty" ? pretty : report.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        f << text;
    }
}

std::string render_suites(const Json& report) {
    std::ostringstream os;
    for (const auto& s : report.at("suites")) {
        os << (s.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ") << s.at("name").get<std::string>()
           << "\n";
        if (s.at("details").contains("failures"))
            for (const auto& f : s["details"]["failures"])
                os << "       " << f.get<std::string>() << "\n";
    }
    os << (report.at("pass").get<bool>() ? "all suites passed\n" : "verification FAILED\n");
    return os.str();
}

int cmd_act(const GlobalOpts& g, const std::string& word_str, int seed_index,
            const std::string& seed_json_path) {
    GroupType type = parse_type_or_throw(g.type);
    const auto& spec = GroupSpec::get(type);
    auto tab = SymbolTable::make(type, {"c0", "c1"});
    auto word = parse_word(word_str);
    TauSection sec;
    if (!seed_json_path.empty()) {
        std::ifstream f(seed_json_path);
        if (!f) throw engine_error("cannot open " + seed_json_path);
        Json j = Json::parse(f);
        sec.lam = lattice_from_json(j.at("lambda"), spec.n);
        sec.F = element_from_json(tab, j.at("F"));
    } else {
        if (seed_index < 1 || seed_index > spec.n)
            throw engine_error("seed tau index out of range");
        sec = tau_seed(tab, seed_index);
    }
    auto img = apply_word(spec, word, sec);
    Json report{{"schema", 1},
                {"command", "act"},
                {"type", group_name(type)},
                {"word", word},
                {"result", section_to_json(img)}};
    emit(g, report, pretty_section(spec, img) + "\n");
    return 0;
}

int cmd_fpoly(const GlobalOpts& g, const std::string& word_str, const std::string& lambda_json,
              const std::string& mode, int nseeds, int tau_index) {
    GroupType type = parse_type_or_throw(g.type);
    const auto& spec = GroupSpec::get(type);
    auto tab = SymbolTable::make(type);
    Json report{{"schema", 1}, {"command", "fpoly"}, {"type", group_name(type)},
                {"mode", mode}, {"seed", g.seed}};
    bool ok = true;

    TauSection sec;
    bool have_sec = false;
    LatticeVector lam = LatticeVector::zero(spec.n);
    if (!word_str.empty()) {
        auto word = parse_word(word_str);
        if (tau_index < 1 || tau_index > spec.n) throw engine_error("seed tau index out of range");
        sec = construct_via_weyl(spec, word, tau_index, tab);
        lam = sec.lam;
        have_sec = true;
        report["word"] = word;
    } else if (!lambda_json.empty()) {
        lam = lattice_from_json(Json::parse(lambda_json), spec.n);
    } else {
        throw engine_error("fpoly needs --word or --lambda");
    }
    report["lambda"] = lattice_to_json(lam);
    report["dimension_count"] = dimension_count(lam);

    if (have_sec && (mode == "weyl" || mode == "both")) {
        auto rep = check_conditions(spec, lam, sec.F);
        Json cond = Json::array();
        for (const auto& s : rep.slices)
            cond.push_back({{"side", std::string(1, s.side)},
                            {"slice", s.index},
                            {"pass", s.pass},
                            {"reason", s.reason}});
        report["conditions"] = cond;
        report["F"] = element_to_json(sec.F);
        ok = ok && rep.pass;
    }
    if (mode == "linear" || mode == "both") {
        std::mt19937_64 rng(g.seed);
        Json runs = Json::array();
        for (int t = 0; t < nseeds; ++t) {
            Specialization sp;
            LinearSolveResult res;
            for (;;) {
                sp = random_specialization(tab, rng);
                try {
                    res = solve_linear_system(spec, tab, lam, sp);
                    break;
                } catch (const engine_error&) {
                }
            }
            Json basis = Json::array();
            for (const auto& v : res.basis) {
                Json row = Json::array();
                for (const auto& r : v) row.push_back(pretty_rat(r));
                basis.push_back(row);
            }
            Json run{{"dim", res.dim}, {"basis", basis}};
            if (have_sec) {
                auto grid = coefficient_grid(sec.F, lam, sp);
                bool member = in_solution_space(spec, tab, lam, sp, grid);
                run["weyl_in_space"] = member;
                ok = ok && member;
            }
            ok = ok && (res.dim == dimension_count(lam));
            runs.push_back(run);
        }
        report["specializations"] = runs;
    }
    report["pass"] = ok;
    std::ostringstream pretty;
    pretty << (ok ? "[PASS]" : "[FAIL]") << " fpoly dim=" << dimension_count(lam) << "\n";
    if (have_sec) pretty << pretty_section(spec, sec) << "\n";
    emit(g, report, pretty.str());
    return ok ? 0 : 1;
}

int cmd_curve(const GlobalOpts& g, const std::string& emit_mode, const std::string& verify) {
    GroupType type = parse_type_or_throw(g.type);
    auto tab = curve_table(type);
    auto elim = elimination_map(tab, type);
    auto P = build_explicit_curve(tab, type).substitute_params(elim);
    Json report{{"schema", 1}, {"command", "curve"}, {"type", group_name(type)},
                {"seed", g.seed}, {"elim", GroupSpec::get(type).elim_symbol}};
    report["lambda"] = lattice_to_json(curve_class(type));
    if (emit_mode == "json") report["P"] = element_to_json(P);
    bool ok = true;
    if (verify == "space" || verify == "all") {
        std::mt19937_64 rng(g.seed);
        auto chk = verify_curve_space(type, rng);
        report["space"] = {{"class_fixed", chk.class_fixed},
                           {"conditions", chk.conditions},
                           {"dim_constrained", chk.dim_constrained},
                           {"dim_free", chk.dim_free},
                           {"basis_spans", chk.basis_spans},
                           {"aux_root", chk.aux_root}};
        ok = ok && chk.class_fixed && chk.conditions && chk.dim_constrained && chk.dim_free &&
             chk.basis_spans && chk.aux_root;
    }
    if (verify == "invariance" || verify == "all") {
        auto fails = verify_curve_invariance(type);
        report["invariance_failures"] = fails;
        ok = ok && fails.empty();
        if (type == GroupType::E8) {
            bool hinv = verify_e8_hinv_s0();
            report["hinv_s0"] = hinv;
            ok = ok && hinv;
        }
    }
    report["pass"] = ok;
    std::ostringstream pretty;
    pretty << (ok ? "[PASS]" : "[FAIL]") << " curve " << group_name(type) << "\n";
    if (emit_mode == "pretty") {
        TauSection sec{P, curve_class(type)};
        pretty << pretty_section(GroupSpec::get(type), sec) << "\n";
    }
    emit(g, report, pretty.str());
    return ok ? 0 : 1;
}

int cmd_bilinear(const GlobalOpts& g, const std::string& seeds_file, int transports, int max_len) {
    auto tab = SymbolTable::make(GroupType::E8);
    const auto& spec = GroupSpec::get(GroupType::E8);
    std::map<LatticeVector, TauSection> overrides;
    if (!seeds_file.empty()) {
        std::ifstream f(seeds_file);
        if (!f) throw engine_error("cannot open " + seeds_file);
        Json j = Json::parse(f);
        for (auto it = j.begin(); it != j.end(); ++it) {
            LatticeVector lam = lattice_from_json(it.value().at("lambda"), spec.n);
            overrides[lam] = {element_from_json(tab, it.value().at("F")), lam};
        }
    }
    TauEvaluator ev(tab, spec, 8, overrides.empty() ? nullptr : &overrides);
    Json rels_out = Json::array();
    bool ok = true;
    auto rels = seed_relations(tab);
    for (const auto& r : rels) {
        bool p = verify_relation(ev, r);
        rels_out.push_back({{"relation", r.label}, {"pass", p}});
        ok = ok && p;
    }
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<int> pick_rel(0, static_cast<int>(rels.size()) - 1);
    std::uniform_int_distribution<int> pick_gen(0, static_cast<int>(spec.gens.size()) - 1);
    std::uniform_int_distribution<int> pick_len(1, std::max(1, max_len));
    for (int t = 0; t < transports; ++t) {
        std::vector<int> word;
        for (int k = pick_len(rng); k > 0; --k) word.push_back(pick_gen(rng));
        auto moved = transport_relation(spec, word, rels[pick_rel(rng)]);
        bool p = verify_relation(ev, moved);
        std::ostringstream w;
        for (size_t i = 0; i < word.size(); ++i) w << (i ? " " : "") << word[i];
        rels_out.push_back({{"relation", moved.label}, {"word", w.str()}, {"pass", p}});
        ok = ok && p;
    }
    bool h1 = verify_hirota_triple(ev, 1, 2, 3);
    bool h2 = verify_hirota_second(ev);
    ok = ok && h1 && h2;
    Json report{{"schema", 1},      {"command", "bilinear"}, {"seed", g.seed},
                {"relations", rels_out}, {"hirota", Json{{"first", h1}, {"second", h2}}},
                {"pass", ok}};
    std::ostringstream pretty;
    pretty << (ok ? "[PASS]" : "[FAIL]") << " bilinear: " << rels_out.size()
           << " relations checked\n";
    emit(g, report, pretty.str());
    return ok ? 0 : 1;
}

int cmd_identities(const GlobalOpts& g, const std::string& which, int order, int trials) {
    RationalSampler s(g.seed);
    Json runs = Json::array();
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
        bool p = true;
        Json cfg;
        if (which == "dilog") {
            Rat a = s.next(), b = s.next(), q = s.next();
            p = verify_dilog_identity(a, b, q, order);
            cfg = {{"a", rat_str(a)}, {"b", rat_str(b)}, {"q", rat_str(q)}};
        } else if (which == "heine") {
            Rat a = s.next(), b = s.next(), q = s.next();
            p = verify_red_ppp(a, b, q, order) && verify_heine_transform(a, q, 1 + t % 3, order);
            cfg = {{"a", rat_str(a)}, {"b", rat_str(b)}, {"q", rat_str(q)}};
        } else if (which == "binom") {
            Rat a = s.next(), q = s.next();
            p = verify_q_binomial(a, q, order);
            cfg = {{"a", rat_str(a)}, {"q", rat_str(q)}};
        } else if (which == "braid-G") {
            Rat q = s.next();
            p = verify_braid_G(q, order);
            cfg = {{"q", rat_str(q)}};
        } else {
            throw engine_error("unknown identity " + which);
        }
        runs.push_back({{"config", cfg}, {"pass", p}});
        ok = ok && p;
    }
    Json report{{"schema", 1}, {"command", "identities"}, {"which", which},
                {"order", order}, {"seed", g.seed}, {"runs", runs}, {"pass", ok}};
    std::ostringstream pretty;
    pretty << (ok ? "[PASS]" : "[FAIL]") << " identities " << which << " x" << trials << "\n";
    emit(g, report, pretty.str());
    return ok ? 0 : 1;
}

int cmd_orbit(const GlobalOpts& g, int max_len) {
    GroupType type = parse_type_or_throw(g.type);
    const auto& spec = GroupSpec::get(type);
    std::vector<LatticeVector> seeds;
    for (int i = 1; i <= spec.n; ++i) seeds.push_back(LatticeVector::E(spec.n, i));
    auto orb = orbit_with_words(spec, seeds, max_len);
    bool ok = true;
    Json list = Json::array();
    for (const auto& e : orb) {
        bool dim1 = dimension_count(e.lam) == 1;
        ok = ok && dim1;
        std::ostringstream w;
        for (size_t i = 0; i < e.word.size(); ++i) w << (i ? " " : "") << e.word[i];
        list.push_back({{"lambda", lattice_to_json(e.lam)},
                        {"seed", e.seed_index},
                        {"word", w.str()},
                        {"dim1", dim1}});
    }
    Json report{{"schema", 1},       {"command", "orbit"}, {"type", group_name(type)},
                {"max_len", max_len}, {"count", orb.size()}, {"elements", list},
                {"pass", ok}};
    std::ostringstream pretty;
    pretty << (ok ? "[PASS]" : "[FAIL]") << " orbit size " << orb.size() << " up to length "
           << max_len << "\n";
    emit(g, report, pretty.str());
    return ok ? 0 : 1;
}


int cmd_verify_relations(const GlobalOpts& g, int depth) {
    GroupType type = parse_type_or_throw(g.type);
    auto res = suites::relations_at_depth(type, depth);
    Json report{{"schema", 1}, {"command", "verify-relations"}, {"type", group_name(type)},
                {"depth", depth}, {"pass", res.pass}};
    report["details"] = res.details;
    std::ostringstream pretty;
    pretty << (res.pass ? "[PASS]" : "[FAIL]") << " relations at probe depth " << depth << "\n";
    emit(g, report, pretty.str());
    return res.pass ? 0 : 1;
}

int cmd_verify_paper(const GlobalOpts& g, const std::vector<std::string>& only) {
    std::vector<std::string> names = suite_names();
    if (!only.empty()) {
        std::vector<std::string> filtered;
        for (const auto& n : names)
            for (const auto& o : only)
                if (n == o) filtered.push_back(n);
        if (filtered.empty()) throw engine_error("no matching suite for --only");
        names = filtered;
    }
    std::vector<SuiteResult> results(names.size());
    if (g.jobs > 1) {
        std::vector<std::future<SuiteResult>> futs;
        for (const auto& n : names)
            futs.push_back(std::async(std::launch::async,
                                      [n, seed = g.seed] { return run_suite(n, seed); }));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < names.size(); ++i) results[i] = run_suite(names[i], g.seed);
    }
    bool all = true;
    Json suites_json = Json::array();
    // stable ordering by suite name; the numeric prefixes encode the run order
    std::sort(results.begin(), results.end(),
              [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
    for (const auto& r : results) {
        all = all && r.pass;
        suites_json.push_back({{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    }
    Json report{{"schema", 1}, {"command", "verify-paper"}, {"seed", g.seed},
                {"suites", suites_json}, {"pass", all}};
    emit(g, report, render_suites(report));
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for quantum Weyl group actions and quantum curves"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--type", g.type, "group type: e8, e7, e6, d5")->capture_default_str();
    app.add_option("--rng-seed", g.seed, "seed for every stochastic choice")
        ->capture_default_str();
    app.add_option("--out", g.out, "write the report to a file instead of stdout");
    app.add_option("--format", g.format, "json or pretty")->capture_default_str();
    app.add_option("--jobs", g.jobs, "run suites concurrently")->capture_default_str();

    auto* act = app.add_subcommand("act", "apply a Weyl word to a tau section");
    act->fallthrough();
    std::string word, seed_json;
    int seed_index = 1;
    act->add_option("--word", word, "generator indices, rightmost acts first")->required();
    act->add_option("--seed", seed_index, "tau index of the seed section");
    act->add_option("--seed-json", seed_json, "JSON file with {lambda, F}");

    auto* fp = app.add_subcommand("fpoly", "characterize a fundamental polynomial");
    fp->fallthrough();
    std::string fp_word, fp_lambda, fp_mode = "both";
    int fp_seeds = 3, fp_tau = 1;
    fp->add_option("--word", fp_word, "Weyl word for the constructive route");
    fp->add_option("--lambda", fp_lambda, "class as JSON {\"d\":[..],\"m\":[..]}");
    fp->add_option("--mode", fp_mode, "weyl, linear or both")->capture_default_str();
    fp->add_option("--seeds", fp_seeds, "number of exact specializations")->capture_default_str();
    fp->add_option("--seed", fp_tau, "tau index for the constructive route")->capture_default_str();

    auto* cv = app.add_subcommand("curve", "build and verify the invariant quantum curve");
    cv->fallthrough();
    std::string cv_emit = "json", cv_verify = "all";
    cv->add_option("--emit", cv_emit, "json or pretty")->capture_default_str();
    cv->add_option("--verify", cv_verify, "space, invariance or all")->capture_default_str();

    auto* bl = app.add_subcommand("bilinear", "verify the bilinear tau system");
    bl->fallthrough();
    std::string bl_seeds;
    int bl_words = 50, bl_maxlen = 4;
    bl->add_option("--seeds-file", bl_seeds, "JSON overrides for the seed values");
    bl->add_option("--transport-words", bl_words, "number of transported relations")
        ->capture_default_str();
    bl->add_option("--max-len", bl_maxlen, "maximum transport word length")
        ->capture_default_str();

    auto* id = app.add_subcommand("identities", "q-series identity checks");
    id->fallthrough();
    std::string id_which = "dilog";
    int id_order = 8, id_trials = 3;
    id->add_option("--which", id_which, "dilog, heine, binom or braid-G")->capture_default_str();
    id->add_option("--order", id_order, "series truncation order")->capture_default_str();
    id->add_option("--trials", id_trials, "number of random specializations")
        ->capture_default_str();

    auto* ob = app.add_subcommand("orbit", "enumerate the Weyl orbit of the point classes");
    ob->fallthrough();
    int ob_len = 4;
    ob->add_option("--max-len", ob_len, "maximum word length")->capture_default_str();

    auto* vr = app.add_subcommand("verify-relations", "sweep the Coxeter relations over orbit probes");
    vr->fallthrough();
    int vr_depth = 2;
    vr->add_option("--depth", vr_depth, "probe-state orbit word length")->capture_default_str();

    auto* vp = app.add_subcommand("verify-paper", "run the full verification battery");
    vp->fallthrough();
    std::vector<std::string> vp_only;
    vp->add_option("--only", vp_only, "restrict to named suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (*act) return cmd_act(g, word, seed_index, seed_json);
        if (*fp) return cmd_fpoly(g, fp_word, fp_lambda, fp_mode, fp_seeds, fp_tau);
        if (*cv) return cmd_curve(g, cv_emit, cv_verify);
        if (*bl) return cmd_bilinear(g, bl_seeds, bl_words, bl_maxlen);
        if (*id) return cmd_identities(g, id_which, id_order, id_trials);
        if (*ob) return cmd_orbit(g, ob_len);
        if (*vr) return cmd_verify_relations(g, vr_depth);
        if (*vp) return cmd_verify_paper(g, vp_only);
    } catch (const engine_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
