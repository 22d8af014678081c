#include "sl2pairs/classify.hpp"

#include "sl2pairs/numth.hpp"
#include "sl2pairs/tabbuild.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sl2pairs::classify {

using chartab::CycNum;
using chartab::Table;
using gelfand::PairVerdict;
using matgrp::Group;
using matgrp::Mat;

namespace {

std::vector<std::string> generator_literals(const Group& g) {
    std::vector<std::string> out;
    for (const Mat& m : g.gens) out.push_back(m.to_string());
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

CandidateReport report_from_verdict(const std::vector<std::string>& aliases, const PairVerdict& v) {
    CandidateReport r;
    r.aliases = aliases;
    r.order = v.order;
    r.strong = v.strong;
    r.method = v.method;
    if (v.witness) r.reason = v.witness->to_string();
    return r;
}

ClassifyReport classify_lattice(long p) {
    ClassifyReport rep;
    rep.p = p;
    rep.mode = "lattice";
    Group g = matgrp::sl2(p);
    Table tabG = (p >= 5) ? chartab::table_SL2(p) : tabbuild::build_table(g, "SL2");
    auto lattice = subgrp::full_lattice(p);

    for (const auto& rec : lattice) {
        const Group& h = rec.group;
        auto aliases = subgrp::label_aliases(g, h);
        Table tabH = (h.order() == g.order()) ? tabG : tabbuild::build_table(h);
        PairVerdict v = gelfand::verdict_both(tabG, tabH);
        v.label = aliases.front();
        CandidateReport cr = report_from_verdict(aliases, v);
        if (v.strong) cr.reason = "all multiplicities <= 1; Schur ring commutative";
        rep.candidates.push_back(std::move(cr));
        if (v.strong && h.order() > 1 && h.order() < g.order())
            for (const auto& a : aliases) rep.strong_pairs.push_back(a);
    }
    std::sort(rep.strong_pairs.begin(), rep.strong_pairs.end());
    return rep;
}

ClassifyReport classify_section4(long p) {
    ClassifyReport rep;
    rep.p = p;
    rep.mode = "section4";
    Table tabG = chartab::table_SL2(p);
    Table tabU = chartab::table_U(p);
    Group g = tabG.group;

    // Maximal subgroups of SL(2,p) correspond to those of PSL(2,p) (each
    // contains -1); the non-Borel kinds die by the total-character bound
    // against the degree-(p+1) characters.
    for (const auto& mk : subgrp::maximal_kinds(p)) {
        if (mk.kind == subgrp::MaximalKind::BorelImage) continue;
        auto dr = gelfand::total_degree_reject(mk.kind, p);
        std::ostringstream os;
        os << subgrp::maximal_kind_name(mk.kind) << " (order " << mk.order << "): deg(tau) = "
           << dr.total_degree << " < " << dr.bound << " = p+1, rejected";
        if (!dr.rejected) os << " -- BOUND FAILED";
        rep.kind_rejections.push_back(os.str());
    }
    if (p % 5 != 1 && p % 5 != 4)
        rep.kind_rejections.push_back("A5: not a subgroup (60 does not divide |PSL(2," +
                                      std::to_string(p) + ")|)");
    if (p % 8 != 1 && p % 8 != 7)
        rep.kind_rejections.push_back("S4: not a subgroup of PSL(2," + std::to_string(p) + ")");

    // (G, U): the restriction decompositions, then the multiplicity matrix
    auto prop1 = check_restriction_decompositions(tabG, tabU);
    if (!all_hold(prop1)) throw std::logic_error("classify: restriction decompositions failed");
    PairVerdict vu = gelfand::strong_gelfand_chars(gelfand::multiplicity_matrix(tabG, tabU));
    if (!vu.strong) throw std::logic_error("classify: (G,U) multiplicity matrix has an entry > 1");
    vu.p = p;
    vu.label = "U";
    vu.order = tabU.order;
    {
        CandidateReport cr;
        cr.aliases = {"U"};
        cr.order = tabU.order;
        cr.strong = true;
        cr.method = "chars";
        cr.reason = "all " + std::to_string(prop1.size()) +
                    " restriction decompositions hold; multiplicities <= 1";
        rep.candidates.push_back(cr);
        rep.strong_pairs.push_back("U");
    }

    // Subgroups of U up to conjugacy: <a^s> x| <b> ("H_s") and <a^s>
    // ("<a^s>") for divisors s of p-1. Verdicts walk down from U with
    // containment pruning.
    std::map<long, PairVerdict> borel_verdicts; // s -> verdict for H_s
    std::map<long, Group> borel_groups;
    auto sg = matgrp::standard_generators(p);

    std::vector<long> divs = numth::divisors(p - 1);
    // H_s nodes, s > 1 ascending so that prime nodes are decided first
    for (long s : divs) {
        if (s == 1) continue;
        Group hs = subgrp::borel_subgroup(p, s);
        borel_groups.emplace(s, hs);
        std::string label = "H_" + std::to_string(s);
        // a false verdict on any H_{s'} with s' | s prunes H_s
        long pruned_via = 0;
        for (long sp : divs) {
            if (sp == 1 || sp == s || s % sp != 0) continue;
            auto it = borel_verdicts.find(sp);
            if (it != borel_verdicts.end() && !it->second.strong) { pruned_via = sp; break; }
        }
        PairVerdict v;
        if (pruned_via) {
            v = gelfand::prune_by_lemma2(borel_verdicts.at(pruned_via), borel_groups.at(pruned_via),
                                         hs, label);
        } else {
            Table tabH = tabbuild::table_borel_subgroup(p, s);
            v = gelfand::strong_gelfand_chars(gelfand::multiplicity_matrix(tabG, tabH));
            v.p = p;
            v.label = label;
            v.order = hs.order();
        }
        borel_verdicts.emplace(s, v);
        CandidateReport cr = report_from_verdict({label}, v);
        cr.order = hs.order();
        if (v.strong) cr.reason = "all multiplicities <= 1";
        rep.candidates.push_back(std::move(cr));
        if (v.strong) rep.strong_pairs.push_back(label);
    }
    // <a^s> nodes: all lie inside A = <a>, so one direct rejection of A
    // prunes the whole chain
    {
        Group a_grp = matgrp::generate(p, {sg.a});
        Table tabA = tabbuild::table_cyclic(a_grp, "A");
        PairVerdict va = gelfand::strong_gelfand_chars(gelfand::multiplicity_matrix(tabG, tabA));
        va.p = p;
        va.label = "A";
        va.order = a_grp.order();
        if (va.strong) throw std::logic_error("classify: (G,A) unexpectedly strong Gelfand");
        CandidateReport cr = report_from_verdict({"A", "C_" + std::to_string(p - 1)}, va);
        rep.candidates.push_back(std::move(cr));
        for (long s : divs) {
            if (s == 1 || s == p - 1) continue; // s = p-1 gives the trivial subgroup
            Group as = matgrp::generate(p, {matgrp::mat_pow(sg.a, s)});
            std::string label = "<a^" + std::to_string(s) + ">";
            PairVerdict v = gelfand::prune_by_lemma2(va, a_grp, as, label);
            rep.candidates.push_back(report_from_verdict({label}, v));
        }
    }
    std::sort(rep.strong_pairs.begin(), rep.strong_pairs.end());
    return rep;
}

} // namespace

ClassifyReport run_classify(long p, long max_p) {
    if (!numth::is_prime(p)) throw std::invalid_argument("classify: p must be prime");
    if (p > max_p) throw std::invalid_argument("classify: p exceeds the configured cap");
    if (p <= 11) return classify_lattice(p);
    return classify_section4(p);
}

namespace {

std::vector<CycNum> row_sum(const Table& tab, const std::vector<std::string>& names) {
    std::vector<CycNum> sum(tab.num_cols(), CycNum(0));
    for (const auto& name : names) {
        const chartab::Character* ch = tab.find_char(name);
        if (!ch) throw std::invalid_argument("row_sum: no character named " + name);
        for (long c = 0; c < tab.num_cols(); ++c) sum[c] += ch->values[c];
    }
    return sum;
}

} // namespace

std::vector<Prop1Check> check_restriction_decompositions(const Table& tabG, const Table& tabU) {
    long p = tabG.p;
    auto fusion = chartab::fuse(tabG, tabU);
    std::vector<Prop1Check> out;
    auto check = [&](const std::string& item, const std::string& g_name,
                     const std::vector<std::string>& u_names) {
        const chartab::Character* ch = tabG.find_char(g_name);
        if (!ch) throw std::invalid_argument("check_restrictions: no character " + g_name);
        auto lhs = chartab::restrict_character(ch->values, fusion);
        auto rhs = row_sum(tabU, u_names);
        out.push_back({"(" + item + ") " + g_name + "|_U = " + join(u_names, " + "), lhs == rhs});
    };
    auto lin = [](long k) { return "chi_{0," + std::to_string(k) + "}"; };

    check("i", "1", {"1"});
    check("ii", "phi", {"1", "chi_{1,2}", "chi_{2,2}"});
    for (long i = 1; i <= (p - 3) / 2; ++i) {
        std::string name = "chi_" + std::to_string(i);
        if (i % 2 == 1)
            check("iii", name, {lin(i), lin(p - 1 - i), "chi_{1,1}", "chi_{2,1}"});
        else
            check("iv", name, {lin(i), lin(p - 1 - i), "chi_{1,2}", "chi_{2,2}"});
    }
    for (long j = 1; j <= (p - 1) / 2; ++j) {
        std::string name = "theta_" + std::to_string(j);
        if (j % 2 == 1)
            check("v", name, {"chi_{1,1}", "chi_{2,1}"});
        else
            check("vi", name, {"chi_{1,2}", "chi_{2,2}"});
    }
    if (p % 4 == 1) {
        check("vii", "xi_1", {lin((p - 1) / 2), "chi_{1,2}"});
        check("viii", "xi_2", {lin((p - 1) / 2), "chi_{2,2}"});
        check("ix", "eta_1", {"chi_{1,1}"});
        check("x", "eta_2", {"chi_{2,1}"});
    } else {
        check("xi", "xi_1'", {lin((p - 1) / 2), "chi_{1,1}"});
        check("xii", "xi_2'", {lin((p - 1) / 2), "chi_{2,1}"});
        check("xiii", "eta_1'", {"chi_{1,2}"});
        check("xiv", "eta_2'", {"chi_{2,2}"});
    }
    return out;
}

bool all_hold(const std::vector<Prop1Check>& checks) {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return !checks.empty();
}

bool frobenius_reciprocity_holds(const Table& tabG, const Table& tabH, std::string* detail) {
    auto mm = gelfand::multiplicity_matrix(tabG, tabH);
    auto ind = chartab::induction_data(tabG, tabH);
    for (size_t j = 0; j < tabH.chars.size(); ++j) {
        auto up = chartab::induce_brute(tabH.chars[j].values, ind, tabG);
        for (size_t i = 0; i < tabG.chars.size(); ++i) {
            auto ip = chartab::inner_product(tabG, tabG.chars[i].values, up);
            if (!ip || *ip != chartab::Rational(mm.entries[i][j])) {
                if (detail)
                    *detail = "<" + tabG.chars[i].name + ", " + tabH.chars[j].name +
                              " up G> != <" + tabG.chars[i].name + "|_H, " + tabH.chars[j].name + ">";
                return false;
            }
        }
    }
    return true;
}

chartab::Table table_for_subgroup(long p, const Group& h) {
    for (long i = 0; i < h.order(); ++i)
        if (matgrp::element_order(h.element(i)) == h.order())
            return tabbuild::table_cyclic(h);
    if (p >= 5) {
        for (long s : numth::divisors(p - 1)) {
            if (h.order() != p * (p - 1) / s) continue;
            if (h.ids == subgrp::borel_subgroup(p, s).ids) return tabbuild::table_borel_subgroup(p, s);
        }
    }
    return tabbuild::build_table(h);
}

std::vector<SuiteResult> selftest(long p, long max_p) {
    if (!numth::is_prime(p)) throw std::invalid_argument("selftest: p must be prime");
    if (p > max_p) throw std::invalid_argument("selftest: p exceeds the configured cap");
    std::vector<SuiteResult> out;
    auto run = [&](const std::string& name, auto&& fn) {
        SuiteResult r;
        r.name = name;
        try {
            fn(r);
            if (!r.skipped) r.ok = r.detail.empty();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    };

    if (p > 2) {
        run("gauss-lemma1", [&](SuiteResult& r) {
            auto gs = cyclo::gauss_sums(p);
            CycNum diff = gs.z - gs.zt;
            bool ok = (gs.z + gs.zt == CycNum(-1)) && (diff * diff == CycNum(p % 4 == 1 ? p : -p));
            if (!ok) r.detail = "Gauss sum identities failed";
        });
    }
    if (p >= 5) {
        run("orthogonality-U", [&](SuiteResult& r) {
            auto res = chartab::verify_orthogonality(chartab::table_U(p));
            if (!res.ok) r.detail = res.detail;
        });
        run("orthogonality-SL2", [&](SuiteResult& r) {
            auto res = chartab::verify_orthogonality(chartab::table_SL2(p));
            if (!res.ok) r.detail = res.detail;
        });
        run("orthogonality-PSL2", [&](SuiteResult& r) {
            auto res = chartab::verify_orthogonality(chartab::table_PSL2(p));
            if (!res.ok) r.detail = res.detail;
        });
        run("restriction-decompositions", [&](SuiteResult& r) {
            auto checks = check_restriction_decompositions(chartab::table_SL2(p), chartab::table_U(p));
            for (const auto& c : checks)
                if (!c.holds) r.detail += c.item + " failed; ";
        });
        run("munkholm-induction", [&](SuiteResult& r) {
            Table tabU = chartab::table_U(p);
            for (long i = 1; i <= p - 1; ++i) {
                for (long k = 1; k <= 2; ++k) {
                    auto vals = chartab::munkholm_induce(p, i, k);
                    long s = numth::is_quadratic_residue(i, p) ? 1 : 2;
                    std::string target =
                        "chi_{" + std::to_string(s) + "," + std::to_string(k) + "}";
                    if (vals != tabU.find_char(target)->values) {
                        r.detail = "induced T_{" + std::to_string(i) + "," + std::to_string(k) +
                                   "} does not match " + target;
                        return;
                    }
                }
            }
        });
    } else {
        run("orthogonality-built-table", [&](SuiteResult& r) {
            auto res = chartab::verify_orthogonality(tabbuild::build_table(matgrp::sl2(p), "SL2"));
            if (!res.ok) r.detail = res.detail;
        });
    }
    if (p >= 5 && p <= 13) {
        run("frobenius-reciprocity-U", [&](SuiteResult& r) {
            std::string d;
            if (!frobenius_reciprocity_holds(chartab::table_SL2(p), chartab::table_U(p), &d))
                r.detail = d;
        });
        run("frobenius-reciprocity-B'", [&](SuiteResult& r) {
            auto sg = matgrp::standard_generators(p);
            Group bp = matgrp::generate(p, {sg.minus1, sg.b});
            std::string d;
            if (!frobenius_reciprocity_holds(chartab::table_SL2(p), tabbuild::table_cyclic(bp, "B'"),
                                             &d))
                r.detail = d;
        });
    }
    run("oracle-agreement", [&](SuiteResult& r) {
        if (p <= 11) {
            run_classify(p, max_p); // throws MethodDisagreement on any mismatch
        } else if (p == 13) {
            Table tabG = chartab::table_SL2(p);
            auto sg = matgrp::standard_generators(p);
            std::vector<std::pair<std::string, Group>> subs;
            subs.emplace_back("U", subgrp::borel_subgroup(p, 1));
            subs.emplace_back("H_2", subgrp::borel_subgroup(p, 2));
            subs.emplace_back("H_3", subgrp::borel_subgroup(p, 3));
            subs.emplace_back("A", matgrp::generate(p, {sg.a}));
            for (auto& [label, h] : subs)
                gelfand::verdict_both(tabG, table_for_subgroup(p, h)); // throws on disagreement
        } else {
            r.skipped = true;
            r.ok = true;
            r.detail = "Schur oracle gated to p <= 13";
        }
    });
    return out;
}

} // namespace sl2pairs::classify
