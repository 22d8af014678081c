#include "sl2pairs/subgroups.hpp"

#include "sl2pairs/numth.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sl2pairs::subgrp {

using matgrp::Group;
using matgrp::Mat;

Group borel_subgroup(long p, long s) {
    if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("borel_subgroup: need prime p >= 5");
    if (s < 1 || (p - 1) % s != 0) throw std::invalid_argument("borel_subgroup: s must divide p-1");
    auto sg = matgrp::standard_generators(p);
    return matgrp::generate(p, {matgrp::mat_pow(sg.a, s), sg.b});
}

std::vector<SubgroupRecord> canonical_subgroups(long p) {
    if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("canonical_subgroups: need prime p >= 5");
    auto sg = matgrp::standard_generators(p);
    std::vector<SubgroupRecord> out;
    std::map<std::vector<uint32_t>, int> ids_seen;
    auto push = [&](const std::string& label, Group g) {
        int cid;
        auto it = ids_seen.find(g.ids);
        if (it != ids_seen.end()) {
            cid = it->second;
        } else {
            cid = (int)ids_seen.size();
            ids_seen.emplace(g.ids, cid);
        }
        out.push_back({label, std::move(g), cid});
    };
    push("U", borel_subgroup(p, 1));
    push("A", matgrp::generate(p, {sg.a}));
    push("B", matgrp::generate(p, {sg.b}));
    push("B'", matgrp::generate(p, {sg.minus1, sg.b}));
    for (long q : numth::prime_factors(p - 1)) push("H_" + std::to_string(q), borel_subgroup(p, q));
    if ((p - 1) % 4 == 0) push("H_4", borel_subgroup(p, 4));
    push("<a^2>", matgrp::generate(p, {matgrp::mat_pow(sg.a, 2)}));
    for (long k : numth::prime_factors(p - 1)) {
        if (k == 2 || (p - 1) % (2 * k) != 0) continue;
        push("H_" + std::to_string(2 * k), borel_subgroup(p, 2 * k));
    }
    return out;
}

std::vector<std::vector<std::string>> theorem3_generator_literals(long p) {
    switch (p) {
        case 5:
            return {{"[[3,3],[4,1]]", "[[4,1],[3,1]]", "[[3,0],[1,2]]", "[[4,0],[0,4]]"}};
        case 7:
            return {{"[[4,2],[2,3]]", "[[2,0],[6,4]]", "[[3,2],[2,4]]", "[[0,6],[1,0]]", "[[6,0],[0,6]]"},
                    {"[[3,6],[3,4]]", "[[5,0],[3,3]]", "[[2,6],[5,5]]", "[[4,4],[1,3]]", "[[6,0],[0,6]]"}};
        case 11:
            return {{"[[7,2],[8,4]]", "[[6,2],[1,6]]", "[[10,0],[0,10]]"},
                    {"[[6,9],[2,5]]", "[[8,5],[4,4]]", "[[10,0],[0,10]]"}};
        default:
            throw std::invalid_argument("theorem3 fixtures exist only for p in {5,7,11}");
    }
}

std::vector<SubgroupRecord> theorem3_fixtures(long p) {
    auto lits = theorem3_generator_literals(p);
    std::vector<std::string> labels;
    if (p == 5) labels = {"SL(2,3)"};
    if (p == 7) labels = {"K#1", "K#2"};
    if (p == 11) labels = {"2I#1", "2I#2"};
    std::vector<SubgroupRecord> out;
    for (size_t i = 0; i < lits.size(); ++i) {
        std::vector<Mat> gens;
        for (const auto& s : lits[i]) gens.push_back(matgrp::parse_mat(p, s));
        out.push_back({labels[i], matgrp::generate(p, gens), (int)i});
    }
    return out;
}

std::string maximal_kind_name(MaximalKind k) {
    switch (k) {
        case MaximalKind::DihedralPPlus1: return "dihedral(p+1)";
        case MaximalKind::DihedralPMinus1: return "dihedral(p-1)";
        case MaximalKind::BorelImage: return "image of U";
        case MaximalKind::A4: return "A4";
        case MaximalKind::S4: return "S4";
        case MaximalKind::A5: return "A5";
    }
    return "?";
}

std::vector<MaximalKindInfo> maximal_kinds(long p) {
    if (p < 13 || !numth::is_prime(p)) throw std::invalid_argument("maximal_kinds: need prime p >= 13");
    std::vector<MaximalKindInfo> out;
    out.push_back({MaximalKind::DihedralPPlus1, p + 1});
    out.push_back({MaximalKind::DihedralPMinus1, p - 1});
    out.push_back({MaximalKind::BorelImage, p * (p - 1) / 2});
    out.push_back({MaximalKind::A4, 12});
    if (p % 8 == 1 || p % 8 == 7) out.push_back({MaximalKind::S4, 24});
    if (p % 5 == 1 || p % 5 == 4) out.push_back({MaximalKind::A5, 60}); // 60 | |PSL(2,p)|
    return out;
}

std::vector<Group> lattice_classes(const Group& g, long max_order) {
    if (g.order() > max_order)
        throw std::invalid_argument("lattice_classes: group order " + std::to_string(g.order()) +
                                    " exceeds cap " + std::to_string(max_order));
    std::map<std::vector<uint32_t>, int> seen; // any subgroup instance -> class id
    std::vector<Group> classes;
    auto note_class = [&](const Group& s) {
        int id = (int)classes.size();
        classes.push_back(s);
        for (long i = 0; i < g.order(); ++i) {
            Mat x = g.element(i);
            Mat xi = x.inverse();
            std::vector<uint32_t> conj;
            conj.reserve(s.ids.size());
            for (uint32_t eid : s.ids) conj.push_back((xi * Mat::from_id(g.p, eid) * x).id());
            std::sort(conj.begin(), conj.end());
            seen.emplace(std::move(conj), id);
        }
    };
    note_class(matgrp::generate(g.p, {}));
    for (long i = 0; i < g.order(); ++i) {
        Group c = matgrp::generate(g.p, {g.element(i)});
        if (!seen.count(c.ids)) note_class(c);
    }
    for (size_t idx = 0; idx < classes.size(); ++idx) {
        Group h = classes[idx]; // copy: classes may reallocate while we extend
        if (h.order() == g.order()) continue;
        for (long i = 0; i < g.order(); ++i) {
            Mat x = g.element(i);
            if (h.contains(x)) continue;
            std::vector<Mat> gens = h.gens;
            gens.push_back(x);
            Group s = matgrp::generate(g.p, gens);
            if (!seen.count(s.ids)) note_class(s);
        }
    }
    std::sort(classes.begin(), classes.end(), [](const Group& a, const Group& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.ids < b.ids;
    });
    return classes;
}

std::vector<SubgroupRecord> full_lattice(long p) {
    if (p != 2 && p != 3 && p != 5 && p != 7 && p != 11)
        throw std::invalid_argument("full_lattice: supported for p in {2,3,5,7,11}");
    Group g = matgrp::sl2(p);
    auto classes = lattice_classes(g, 1500);
    std::vector<SubgroupRecord> out;
    for (size_t i = 0; i < classes.size(); ++i)
        out.push_back({"lattice#" + std::to_string(i), classes[i], (int)i});
    return out;
}

std::string order_census(const Group& h) {
    std::map<long, long> census;
    for (long i = 0; i < h.order(); ++i) census[matgrp::element_order(h.element(i))]++;
    std::ostringstream os;
    bool first = true;
    for (auto& [o, c] : census) {
        if (!first) os << " ";
        os << o << ":" << c;
        first = false;
    }
    return os.str();
}

namespace {

bool is_cyclic(const Group& h) {
    for (long i = 0; i < h.order(); ++i)
        if (matgrp::element_order(h.element(i)) == h.order()) return true;
    return false;
}

long involution_count(const Group& h) {
    long n = 0;
    for (long i = 0; i < h.order(); ++i)
        if (matgrp::element_order(h.element(i)) == 2) ++n;
    return n;
}

} // namespace

std::vector<std::string> label_aliases(const Group& g, const Group& h) {
    std::vector<std::string> names;
    long n = h.order();
    if (n == g.order()) return {"G"};
    if (n == 1) return {"1"};
    long p = g.p;
    bool cyc = is_cyclic(h);
    if (cyc) names.push_back("C_" + std::to_string(n));
    if (p >= 3) {
        Group u = matgrp::upper_triangular(p);
        if (n == u.order() && matgrp::is_conjugate_subgroup(g, h, u)) names.push_back("U");
    }
    if (p >= 5) {
        Group h2 = borel_subgroup(p, 2);
        if (n == h2.order() && matgrp::is_conjugate_subgroup(g, h, h2)) names.push_back("H_2");
    }
    if (p == 5 || p == 7 || p == 11) {
        for (const auto& fix : theorem3_fixtures(p))
            if (n == fix.group.order() && matgrp::is_conjugate_subgroup(g, h, fix.group))
                names.push_back(fix.label);
    }
    if (!cyc && n == 24 && order_census(h) == "1:1 2:1 3:8 4:6 6:8") names.push_back("SL(2,3)");
    if (!cyc && n % 4 == 0 && involution_count(h) == 1) {
        // dicyclic: unique involution plus a cyclic subgroup of index 2
        for (long i = 0; i < n; ++i)
            if (matgrp::element_order(h.element(i)) == n / 2) {
                names.push_back("Q_" + std::to_string(n));
                break;
            }
    }
    if (names.empty()) names.push_back("order" + std::to_string(n));
    return names;
}

std::string structural_label(const Group& g, const Group& h) { return label_aliases(g, h).front(); }

} // namespace sl2pairs::subgrp
