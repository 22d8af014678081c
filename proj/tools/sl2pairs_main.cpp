// Command-line front end: character tables, single-pair checks, the full
// classification, Gauss sums, and the cross-validation suites.
//
//   sl2pairs tables   --p 13 --group sl2 [--format json]
//   sl2pairs check    --p 19 --subgroup h2 --method both
//   sl2pairs classify --p 11 [--format json]
//   sl2pairs gauss    --p 7
//   sl2pairs selftest --p 13
//
// Exit codes: 0 success / strong pair, 1 negative verdict, 2 usage error,
// 3 internal consistency failure (method disagreement, broken table).

#include <CLI11.hpp>

#include "sl2pairs/classify.hpp"
#include "sl2pairs/gelfand.hpp"
#include "sl2pairs/json_io.hpp"
#include "sl2pairs/numth.hpp"
#include "sl2pairs/render.hpp"
#include "sl2pairs/tabbuild.hpp"

#include <fstream>
#include <iostream>

using namespace sl2pairs;

namespace {

constexpr int kExitFalseVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
    long p = 0;
    std::string group = "sl2";
    std::string subgroup;
    std::string method = "both";
    std::string format = "text";
    long max_p = 31;
    bool unsafe_p = false;
    bool force_schur = false;
};

long effective_cap(const Options& o) { return o.unsafe_p ? 9973 : o.max_p; }

std::string lower(std::string s) {
    for (auto& c : s) c = (char)tolower((unsigned char)c);
    return s;
}

/// Resolve a subgroup selector: a canonical label, a fixture label, or a
/// path to a file of matrix literals (one per line, '#' comments).
matgrp::Group resolve_subgroup(long p, const std::string& selector) {
    std::string sel = lower(selector);
    matgrp::Group g = matgrp::sl2(p, 9973);
    if (sel == "g") return g;
    if (sel == "u") return (p >= 5) ? subgrp::borel_subgroup(p, 1) : matgrp::upper_triangular(p);
    if (p >= 5) {
        auto sg = matgrp::standard_generators(p);
        if (sel == "a") return matgrp::generate(p, {sg.a});
        if (sel == "b") return matgrp::generate(p, {sg.b});
        if (sel == "b'" || sel == "bprime") return matgrp::generate(p, {sg.minus1, sg.b});
        if (sel == "a2" || sel == "<a^2>") return matgrp::generate(p, {matgrp::mat_pow(sg.a, 2)});
        if (sel.size() > 1 && (sel[0] == 'h' || sel.rfind("h_", 0) == 0)) {
            std::string num = sel.substr(sel.rfind('_') == std::string::npos ? 1 : 2);
            try {
                long s = std::stol(num);
                if (s >= 1 && (p - 1) % s == 0) return subgrp::borel_subgroup(p, s);
            } catch (...) {
            }
        }
    }
    if (p == 5 || p == 7 || p == 11) {
        for (const auto& fix : subgrp::theorem3_fixtures(p))
            if (lower(fix.label) == sel) return fix.group;
    }
    // otherwise: a fixture file
    std::ifstream in(selector);
    if (!in) throw std::invalid_argument("unknown subgroup label and unreadable file: " + selector);
    std::vector<matgrp::Mat> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        gens.push_back(matgrp::parse_mat(p, line));
    }
    if (gens.empty()) throw std::invalid_argument("fixture file has no matrices: " + selector);
    return matgrp::generate(p, gens);
}

int cmd_tables(const Options& o) {
    if (o.p < 5) {
        std::cerr << "tables: closed-form tables need p >= 5\n";
        return kExitUsage;
    }
    chartab::Table t;
    if (o.group == "u")
        t = chartab::table_U(o.p);
    else if (o.group == "sl2")
        t = chartab::table_SL2(o.p);
    else if (o.group == "psl2")
        t = chartab::table_PSL2(o.p);
    else {
        std::cerr << "tables: unknown group selector '" << o.group << "'\n";
        return kExitUsage;
    }
    if (o.format == "json")
        std::cout << json_io::table_to_json(t) << "\n";
    else
        std::cout << render::table_text(t);
    return 0;
}

int cmd_check(const Options& o) {
    matgrp::Group g = matgrp::sl2(o.p, effective_cap(o));
    matgrp::Group h = resolve_subgroup(o.p, o.subgroup);
    if (!matgrp::subgroup_of(g, h)) {
        std::cerr << "check: the selected subgroup is not inside SL(2," << o.p << ")\n";
        return kExitUsage;
    }
    bool want_chars = o.method == "chars" || o.method == "both";
    bool want_schur = o.method == "schur" || o.method == "both";
    if (want_schur && o.p > 13 && !o.force_schur) {
        std::cerr << "check: the Schur-ring oracle is gated to p <= 13 (use --force-schur)\n";
        return kExitUsage;
    }

    gelfand::PairVerdict verdict;
    std::optional<gelfand::PairVerdict> chars_v, schur_v;
    if (want_chars) {
        chartab::Table tabG =
            (o.p >= 5) ? chartab::table_SL2(o.p) : tabbuild::build_table(g, "SL2");
        chartab::Table tabH =
            (h.order() == g.order()) ? tabG : classify::table_for_subgroup(o.p, h);
        chars_v = gelfand::strong_gelfand_chars(gelfand::multiplicity_matrix(tabG, tabH));
    }
    if (want_schur) schur_v = gelfand::schur_ring_commutative(g, h);
    if (chars_v && schur_v && chars_v->strong != schur_v->strong)
        throw gelfand::MethodDisagreement("character and Schur-ring methods disagree on " +
                                          o.subgroup);
    verdict = chars_v ? *chars_v : *schur_v;
    if (chars_v && schur_v) verdict.method = "both";
    verdict.p = o.p;
    verdict.label = o.subgroup;
    verdict.order = h.order();
    for (const auto& m : h.gens) verdict.generators.push_back(m.to_string());

    if (o.format == "json")
        std::cout << json_io::verdict_to_json(verdict) << "\n";
    else
        std::cout << render::verdict_text(verdict);
    return verdict.strong ? 0 : kExitFalseVerdict;
}

int cmd_classify(const Options& o) {
    auto rep = classify::run_classify(o.p, effective_cap(o));
    if (o.format == "json")
        std::cout << json_io::classify_to_json(rep) << "\n";
    else
        std::cout << render::classify_text(rep);
    return 0;
}

int cmd_gauss(const Options& o) {
    if (o.p == 2) {
        std::cerr << "gauss: p must be an odd prime\n";
        return kExitUsage;
    }
    if (o.format == "json")
        std::cout << json_io::gauss_to_json(o.p) << "\n";
    else
        std::cout << render::gauss_text(o.p);
    auto gs = cyclo::gauss_sums(o.p);
    cyclo::CycNum d = gs.z - gs.zt;
    bool ok = (gs.z + gs.zt == cyclo::CycNum(-1)) &&
              (d * d == cyclo::CycNum(o.p % 4 == 1 ? o.p : -o.p));
    return ok ? 0 : kExitInternal;
}

int cmd_selftest(const Options& o) {
    auto res = classify::selftest(o.p, effective_cap(o));
    long failures = 0;
    for (const auto& r : res) {
        std::string status = r.skipped ? "SKIP" : (r.ok ? "PASS" : "FAIL");
        std::cout << status << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (!r.ok) ++failures;
    }
    std::cout << (failures ? "FAILURES: " : "all suites passed: ") << res.size() - failures << "/"
              << res.size() << "\n";
    return failures ? kExitFalseVerdict : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong Gelfand pairs of SL(2,p): tables, verdicts, classification"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool need_p = true) {
        auto* popt = cmd->add_option("--p", o.p, "prime p");
        if (need_p) popt->required();
        cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--max-p", o.max_p, "desk-scale cap (default 31)");
        cmd->add_flag("--unsafe-p", o.unsafe_p, "lift the p <= 31 cap");
    };

    auto* tables = app.add_subcommand("tables", "print a character table");
    add_common(tables);
    tables->add_option("--group", o.group, "u|sl2|psl2")
        ->check(CLI::IsMember({"u", "sl2", "psl2"}));

    auto* check = app.add_subcommand("check", "decide one pair (G, H)");
    add_common(check);
    check->add_option("--subgroup", o.subgroup, "label (g,u,a,b,b',h2,h3,...,fixture name) or file")
        ->required();
    check->add_option("--method", o.method, "chars|schur|both")
        ->check(CLI::IsMember({"chars", "schur", "both"}));
    check->add_flag("--force-schur", o.force_schur, "run the Schur oracle above p = 13");

    auto* classify_cmd = app.add_subcommand("classify", "classify all strong Gelfand pairs");
    add_common(classify_cmd);

    auto* gauss = app.add_subcommand("gauss", "Gauss sums Z, Z^(t) and the Lemma-1 identities");
    add_common(gauss);

    auto* selftest = app.add_subcommand("selftest", "run the cross-validation suites");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (tables->parsed()) return cmd_tables(o);
        if (check->parsed()) return cmd_check(o);
        if (classify_cmd->parsed()) return cmd_classify(o);
        if (gauss->parsed()) return cmd_gauss(o);
        if (selftest->parsed()) return cmd_selftest(o);
    } catch (const gelfand::MethodDisagreement& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const gelfand::IntegrityError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
