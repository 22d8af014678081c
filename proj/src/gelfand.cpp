#include "sl2pairs/gelfand.hpp"

#include "sl2pairs/numth.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sl2pairs::gelfand {

using chartab::CycNum;
using chartab::Rational;
using chartab::Table;
using matgrp::CayleyGroup;
using matgrp::Group;
using matgrp::Mat;

long MultiplicityMatrix::entry(const std::string& chi, const std::string& psi) const {
    for (size_t i = 0; i < g_names.size(); ++i) {
        if (g_names[i] != chi) continue;
        for (size_t j = 0; j < h_names.size(); ++j)
            if (h_names[j] == psi) return entries[i][j];
    }
    throw std::invalid_argument("MultiplicityMatrix::entry: unknown name " + chi + "/" + psi);
}

std::string Witness::to_string() const {
    std::ostringstream os;
    if (kind == "multiplicity") {
        os << "<" << chi << "|_H, " << psi << "> = " << multiplicity;
    } else if (kind == "schur") {
        os << "H-class sums of " << class1 << " and " << class2 << " do not commute";
    } else if (kind == "lemma2") {
        os << "contained in " << via << ", which is not a strong Gelfand pair";
    } else if (kind == "lemma4") {
        os << "total character degree " << via;
    }
    return os.str();
}

MultiplicityMatrix multiplicity_matrix(const Table& tabG, const Table& tabH,
                                       const chartab::FusionMap& fusion) {
    MultiplicityMatrix mm;
    long nH = (long)tabH.chars.size();
    std::vector<std::vector<CycNum>> conj_psi(nH);
    for (long j = 0; j < nH; ++j) {
        mm.h_names.push_back(tabH.chars[j].name);
        mm.h_degrees.push_back(tabH.chars[j].degree);
        for (const auto& v : tabH.chars[j].values) conj_psi[j].push_back(v.conj());
        bool trivial = true;
        for (const auto& v : tabH.chars[j].values)
            if (v != CycNum(1)) { trivial = false; break; }
        if (trivial) mm.trivial_col = (int)j;
    }
    if (mm.trivial_col < 0) throw IntegrityError("multiplicity_matrix: table of H has no trivial character");
    for (const auto& chi : tabG.chars) {
        mm.g_names.push_back(chi.name);
        mm.g_degrees.push_back(chi.degree);
        auto restricted = chartab::restrict_character(chi.values, fusion);
        std::vector<long> row;
        long balance = 0;
        for (long j = 0; j < nH; ++j) {
            cyclo::SumAccumulator acc;
            for (long c = 0; c < tabH.num_cols(); ++c)
                acc.add_product(restricted[c], conj_psi[j][c], Rational(tabH.col_sizes[c]));
            auto r = acc.as_rational();
            if (!r)
                throw IntegrityError("multiplicity_matrix: <" + chi.name + "|_H, " +
                                     tabH.chars[j].name + "> is irrational");
            Rational val = *r / Rational(tabH.order);
            val.canonicalize();
            if (val.get_den() != 1 || val < 0)
                throw IntegrityError("multiplicity_matrix: <" + chi.name + "|_H, " +
                                     tabH.chars[j].name + "> = " + cyclo::rational_to_string(val) +
                                     " is not a nonnegative integer");
            long v = val.get_num().get_si();
            row.push_back(v);
            balance += v * tabH.chars[j].degree;
        }
        if (balance != chi.degree)
            throw IntegrityError("multiplicity_matrix: degree balance broken for " + chi.name +
                                 " (" + std::to_string(balance) + " vs " +
                                 std::to_string(chi.degree) + ")");
        mm.entries.push_back(std::move(row));
    }
    return mm;
}

MultiplicityMatrix multiplicity_matrix(const Table& tabG, const Table& tabH) {
    return multiplicity_matrix(tabG, tabH, chartab::fuse(tabG, tabH));
}

PairVerdict strong_gelfand_chars(const MultiplicityMatrix& mm) {
    PairVerdict v;
    v.method = "chars";
    long best = 0;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < mm.entries.size(); ++i)
        for (size_t j = 0; j < mm.entries[i].size(); ++j)
            if (mm.entries[i][j] > best) {
                best = mm.entries[i][j];
                bi = i;
                bj = j;
            }
    if (best <= 1) {
        v.strong = true;
    } else {
        v.strong = false;
        Witness w;
        w.kind = "multiplicity";
        w.chi = mm.g_names[bi];
        w.psi = mm.h_names[bj];
        w.multiplicity = best;
        v.witness = std::move(w);
    }
    return v;
}

bool gelfand_only(const MultiplicityMatrix& mm) {
    for (const auto& row : mm.entries)
        if (row[mm.trivial_col] > 1) return false;
    return true;
}

PairVerdict schur_ring_commutative_cayley(const CayleyGroup& g, const std::vector<int>& h_elems) {
    long n = g.n;
    // H-classes of g under conjugation by h_elems
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (long i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        int id = (int)classes.size();
        std::vector<int> members;
        std::deque<int> queue{(int)i};
        cls[i] = id;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            members.push_back(x);
            for (int h : h_elems) {
                int y = g.times(g.times(g.inv[h], x), h);
                if (cls[y] < 0) {
                    cls[y] = id;
                    queue.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }

    PairVerdict v;
    v.method = "schur";
    std::vector<long> ab(n), ba(n);
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        for (size_t cj = ci + 1; cj < classes.size(); ++cj) {
            std::fill(ab.begin(), ab.end(), 0);
            std::fill(ba.begin(), ba.end(), 0);
            for (int x : classes[ci])
                for (int y : classes[cj]) {
                    ab[g.times(x, y)]++;
                    ba[g.times(y, x)]++;
                }
            if (ab != ba) {
                v.strong = false;
                Witness w;
                w.kind = "schur";
                w.class1 = g.elem_names[classes[ci].front()];
                w.class2 = g.elem_names[classes[cj].front()];
                v.witness = std::move(w);
                return v;
            }
        }
    }
    v.strong = true;
    return v;
}

PairVerdict schur_ring_commutative(const Group& g, const Group& h) {
    if (!matgrp::subgroup_of(g, h))
        throw std::invalid_argument("schur_ring_commutative: H is not a subgroup of G");
    CayleyGroup cg = matgrp::to_cayley(g);
    std::vector<int> h_idx;
    for (uint32_t id : h.ids) h_idx.push_back((int)g.index_of_id(id));
    PairVerdict v = schur_ring_commutative_cayley(cg, h_idx);
    v.p = g.p;
    v.order = h.order();
    return v;
}

PairVerdict verdict_both(const Table& tabG, const Table& tabH) {
    PairVerdict chars = strong_gelfand_chars(multiplicity_matrix(tabG, tabH));
    PairVerdict schur = schur_ring_commutative(tabG.group, tabH.group);
    if (chars.strong != schur.strong)
        throw MethodDisagreement("character and Schur-ring verdicts disagree for subgroup of order " +
                                 std::to_string(tabH.order));
    PairVerdict v = chars; // prefer the character witness when both reject
    if (!v.witness && schur.witness) v.witness = schur.witness;
    v.method = "both";
    v.p = tabG.p;
    v.order = tabH.order;
    return v;
}

DegreeReject total_degree_reject(subgrp::MaximalKind kind, long p) {
    using subgrp::MaximalKind;
    if (!numth::is_prime(p) || p < 5) throw std::invalid_argument("total_degree_reject: bad p");
    auto dihedral_tau = [](long two_n) {
        long n = two_n / 2;
        // 2n elements: n odd -> 2 linear + (n-1)/2 of degree 2;
        // n even -> 4 linear + (n-2)/2 of degree 2
        return (n % 2 == 1) ? 1 + n : 2 + n;
    };
    DegreeReject r;
    r.bound = p + 1;
    switch (kind) {
        case MaximalKind::DihedralPPlus1: r.total_degree = dihedral_tau(p + 1); break;
        case MaximalKind::DihedralPMinus1: r.total_degree = dihedral_tau(p - 1); break;
        case MaximalKind::A4: r.total_degree = 6; break;
        case MaximalKind::S4:
            if (p % 8 != 1 && p % 8 != 7)
                throw std::invalid_argument("total_degree_reject: S4 does not occur in PSL(2," +
                                            std::to_string(p) + ")");
            r.total_degree = 10;
            break;
        case MaximalKind::A5:
            if (p % 5 != 1 && p % 5 != 4)
                throw std::invalid_argument("total_degree_reject: A5 does not occur in PSL(2," +
                                            std::to_string(p) + ") (60 does not divide its order)");
            r.total_degree = 16;
            break;
        case MaximalKind::BorelImage:
            throw std::invalid_argument("total_degree_reject: the Borel image is not rejected this way");
    }
    r.rejected = r.total_degree < r.bound;
    return r;
}

PairVerdict prune_by_lemma2(const PairVerdict& parent_verdict, const Group& parent_group,
                            const Group& h, const std::string& h_label) {
    if (parent_verdict.strong)
        throw std::invalid_argument("prune_by_lemma2: parent verdict is not a rejection");
    if (!matgrp::subgroup_of(parent_group, h))
        throw std::invalid_argument("prune_by_lemma2: " + h_label + " is not inside " +
                                    parent_verdict.label);
    PairVerdict v;
    v.p = parent_verdict.p;
    v.label = h_label;
    v.order = h.order();
    v.strong = false;
    v.method = "lemma2";
    Witness w;
    w.kind = "lemma2";
    w.via = parent_verdict.label;
    v.witness = std::move(w);
    return v;
}

Lemma3Assertion lift_by_lemma3(const Group& g, const Group& h, const Group& n) {
    if (!matgrp::subgroup_of(g, h) || !matgrp::subgroup_of(h, n))
        throw std::invalid_argument("lift_by_lemma3: need N <= H <= G");
    for (long i = 0; i < g.order(); ++i) {
        Mat x = g.element(i);
        Mat xi = x.inverse();
        for (uint32_t id : n.ids)
            if (!n.contains(xi * Mat::from_id(g.p, id) * x))
                throw std::invalid_argument("lift_by_lemma3: N is not normal in G");
    }
    Lemma3Assertion a;
    a.description = "(G,H) is a strong Gelfand pair iff (G/N, H/N) is, |G|=" +
                    std::to_string(g.order()) + ", |H|=" + std::to_string(h.order()) +
                    ", |N|=" + std::to_string(n.order());
    return a;
}

} // namespace sl2pairs::gelfand
