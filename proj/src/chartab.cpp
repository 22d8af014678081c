#include "sl2pairs/chartab.hpp"

#include "sl2pairs/numth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl2pairs::chartab {

using matgrp::Group;
using matgrp::Mat;

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::Induced: return "induced";
        case Provenance::RestrictedLift: return "restricted-lift";
        case Provenance::Computed: return "computed";
    }
    return "?";
}

int Table::column_of(const Mat& m) const {
    if (projective) throw std::logic_error("column_of: not defined for projective tables");
    return col_of_class[classes.class_of_mat(group, m)];
}

const Character* Table::find_char(const std::string& name) const {
    for (const auto& c : chars)
        if (c.name == name) return &c;
    return nullptr;
}

int Table::char_index(const std::string& name) const {
    for (size_t i = 0; i < chars.size(); ++i)
        if (chars[i].name == name) return (int)i;
    return -1;
}

using matgrp::mat_pow;

namespace {

// Attach column metadata for an explicit representative list; every class
// must be hit exactly once.
void set_columns(Table& t, const std::vector<Mat>& reps, const std::vector<std::string>& labels) {
    long nc = t.classes.num_classes();
    if ((long)reps.size() != nc)
        throw std::logic_error("set_columns: expected " + std::to_string(nc) + " classes, got " +
                               std::to_string(reps.size()) + " representatives");
    t.col_reps = reps;
    t.col_labels = labels;
    t.col_of_class.assign(nc, -1);
    t.col_sizes.assign(nc, 0);
    for (long col = 0; col < nc; ++col) {
        int cls = t.classes.class_of_mat(t.group, reps[col]);
        if (t.col_of_class[cls] != -1)
            throw std::logic_error("set_columns: representatives " + labels[col] + " and " +
                                   labels[t.col_of_class[cls]] + " share a class");
        t.col_of_class[cls] = (int)col;
        t.col_sizes[col] = t.classes.sizes[cls];
        if (reps[col].is_identity()) t.identity_col = col;
    }
}

} // namespace

void finalize_degrees(Table& t) {
    for (auto& ch : t.chars) {
        auto d = ch.values[t.identity_col].to_rational();
        if (!d || d->get_den() != 1 || *d <= 0)
            throw std::logic_error("character " + ch.name + " has bad degree");
        ch.degree = d->get_num().get_si();
    }
}

Table table_skeleton(std::string kind, const Group& g) {
    Table t;
    t.kind = std::move(kind);
    t.p = g.p;
    t.order = g.order();
    t.group = g;
    t.classes = matgrp::conjugacy_classes(g);
    long nc = t.classes.num_classes();
    std::vector<Mat> reps;
    std::vector<std::string> labels;
    for (long c = 0; c < nc; ++c) {
        Mat r = t.classes.rep(g.p, c);
        reps.push_back(r);
        labels.push_back(r.to_string());
    }
    set_columns(t, reps, labels);
    return t;
}

Table table_U(long p) {
    if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("table_U: need prime p >= 5");
    Table t;
    t.kind = "U";
    t.p = p;
    t.group = matgrp::upper_triangular(p);
    t.order = t.group.order();
    t.classes = matgrp::conjugacy_classes(t.group);

    auto sg = matgrp::standard_generators(p);
    std::vector<Mat> reps{Mat::identity(p), sg.minus1};
    std::vector<std::string> labels{"1", "-1"};
    for (long j = 1; j <= p - 2; ++j) {
        if (j == (p - 1) / 2) continue;
        reps.push_back(mat_pow(sg.a, j));
        labels.push_back("a^" + std::to_string(j));
    }
    reps.insert(reps.end(), {sg.b, sg.d, sg.minus1 * sg.b, sg.minus1 * sg.d});
    labels.insert(labels.end(), {"b", "d", "-b", "-d"});
    set_columns(t, reps, labels);

    long nc = t.classes.num_classes();
    auto gs = cyclo::gauss_sums(p, sg.t);
    const CycNum one(1), zero(0);
    CycNum half_deg(cyclo::Rational((p - 1) / 2));

    auto blank = [&](const std::string& name) {
        Character ch;
        ch.name = name;
        ch.provenance = Provenance::ClosedForm;
        ch.values.assign(nc, zero);
        return ch;
    };

    {
        Character ch = blank("1");
        ch.values.assign(nc, one);
        t.chars.push_back(std::move(ch));
    }
    for (long k = 1; k <= p - 2; ++k) {
        Character ch = blank("chi_{0," + std::to_string(k) + "}");
        CycNum sign(k % 2 == 0 ? 1 : -1);
        ch.values[0] = one;
        ch.values[1] = sign;
        long col = 2;
        for (long j = 1; j <= p - 2; ++j) {
            if (j == (p - 1) / 2) continue;
            ch.values[col++] = CycNum::root(p - 1, k * j);
        }
        ch.values[col++] = one;  // b
        ch.values[col++] = one;  // d
        ch.values[col++] = sign; // -b
        ch.values[col++] = sign; // -d
        t.chars.push_back(std::move(ch));
    }
    // the four induced characters; Z and Z^(t) swap under i -> non-residue
    struct Row {
        const char* name;
        int sgn_minus1; // chi(-1) = sgn * (p-1)/2
        bool z_first;   // b-value Z (else Z^(t))
    };
    const Row rows[] = {{"chi_{1,1}", -1, true},
                        {"chi_{1,2}", +1, true},
                        {"chi_{2,1}", -1, false},
                        {"chi_{2,2}", +1, false}};
    for (const Row& r : rows) {
        Character ch = blank(r.name);
        CycNum zb = r.z_first ? gs.z : gs.zt;
        CycNum zd = r.z_first ? gs.zt : gs.z;
        CycNum sgn(r.sgn_minus1);
        ch.values[0] = half_deg;
        ch.values[1] = sgn * half_deg;
        long col = 2 + (p - 3); // a^j columns stay zero
        ch.values[col++] = zb;
        ch.values[col++] = zd;
        ch.values[col++] = sgn * zb;
        ch.values[col++] = sgn * zd;
        t.chars.push_back(std::move(ch));
    }
    finalize_degrees(t);
    return t;
}

std::vector<CycNum> munkholm_induce(long p, long i, long k) {
    if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("munkholm_induce: need prime p >= 5");
    if (i % p == 0) throw std::invalid_argument("munkholm_induce: i must be nonzero mod p");
    if (k != 1 && k != 2) throw std::invalid_argument("munkholm_induce: k must be 1 or 2");
    i %= p;
    if (i < 0) i += p;
    long lambda = numth::primitive_root(p);
    long t = numth::smallest_non_residue(p);
    long step = lambda * lambda % p;

    // chi_{i,k}((-1)^nu b^tau) = (-1)^{nu k} * sum_l eta^{i tau lambda^{2l}}
    auto orbit_sum = [&](long tau) {
        CycNum s;
        long e = 1;
        for (long l = 0; l <= (p - 3) / 2; ++l) {
            s += CycNum::root(p, i * tau % p * e % p);
            e = e * step % p;
        }
        return s;
    };
    CycNum sb = orbit_sum(1), sd = orbit_sum(t);
    CycNum sign(k == 1 ? -1 : 1);
    long ncols = (p + 3);
    std::vector<CycNum> vals(ncols, CycNum(0));
    vals[0] = CycNum(cyclo::Rational((p - 1) / 2));
    vals[1] = sign * vals[0];
    long col = 2 + (p - 3);
    vals[col++] = sb;
    vals[col++] = sd;
    vals[col++] = sign * sb;
    vals[col++] = sign * sd;
    return vals;
}

Table table_SL2(long p) {
    if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("table_SL2: need prime p >= 5");
    Table t;
    t.kind = "SL2";
    t.p = p;
    t.group = matgrp::sl2(p);
    t.order = t.group.order();
    t.classes = matgrp::conjugacy_classes(t.group);

    auto sg = matgrp::standard_generators(p);
    Mat f = matgrp::nonsplit_element(t.group);
    std::vector<Mat> reps{Mat::identity(p), sg.minus1, sg.b, sg.d, sg.minus1 * sg.b, sg.minus1 * sg.d};
    std::vector<std::string> labels{"1", "-1", "b", "d", "-b", "-d"};
    for (long l = 1; l <= (p - 3) / 2; ++l) {
        reps.push_back(mat_pow(sg.a, l));
        labels.push_back("a^" + std::to_string(l));
    }
    for (long m = 1; m <= (p - 1) / 2; ++m) {
        reps.push_back(mat_pow(f, m));
        labels.push_back("f^" + std::to_string(m));
    }
    set_columns(t, reps, labels);

    long nc = t.classes.num_classes();
    auto gs = cyclo::gauss_sums(p, sg.t);
    const CycNum one(1), zero(0);
    long a_base = 6, f_base = 6 + (p - 3) / 2;

    auto blank = [&](const std::string& name) {
        Character ch;
        ch.name = name;
        ch.provenance = Provenance::ClosedForm;
        ch.values.assign(nc, zero);
        return ch;
    };

    {
        Character ch = blank("1");
        ch.values.assign(nc, one);
        t.chars.push_back(std::move(ch));
    }
    {
        Character ch = blank("phi");
        ch.values[0] = CycNum(p);
        ch.values[1] = CycNum(p);
        for (long l = 1; l <= (p - 3) / 2; ++l) ch.values[a_base + l - 1] = one;
        for (long m = 1; m <= (p - 1) / 2; ++m) ch.values[f_base + m - 1] = CycNum(-1);
        t.chars.push_back(std::move(ch));
    }
    for (long i = 1; i <= (p - 3) / 2; ++i) {
        Character ch = blank("chi_" + std::to_string(i));
        CycNum sgn(i % 2 == 0 ? 1 : -1);
        ch.values[0] = CycNum(p + 1);
        ch.values[1] = sgn * CycNum(p + 1);
        ch.values[2] = one;
        ch.values[3] = one;
        ch.values[4] = sgn;
        ch.values[5] = sgn;
        for (long l = 1; l <= (p - 3) / 2; ++l)
            ch.values[a_base + l - 1] = CycNum::root(p - 1, i * l) + CycNum::root(p - 1, -i * l);
        t.chars.push_back(std::move(ch));
    }
    for (long j = 1; j <= (p - 1) / 2; ++j) {
        Character ch = blank("theta_" + std::to_string(j));
        CycNum sgn(j % 2 == 0 ? 1 : -1);
        ch.values[0] = CycNum(p - 1);
        ch.values[1] = sgn * CycNum(p - 1);
        ch.values[2] = CycNum(-1);
        ch.values[3] = CycNum(-1);
        ch.values[4] = -sgn;
        ch.values[5] = -sgn;
        for (long m = 1; m <= (p - 1) / 2; ++m)
            ch.values[f_base + m - 1] = -(CycNum::root(p + 1, j * m) + CycNum::root(p + 1, -j * m));
        t.chars.push_back(std::move(ch));
    }
    CycNum half_plus(cyclo::Rational((p + 1) / 2)), half_minus(cyclo::Rational((p - 1) / 2));
    bool p1mod4 = (p % 4 == 1);
    // xi pair: degree (p+1)/2, supported on unipotent and a^l columns
    for (int which = 1; which <= 2; ++which) {
        Character ch = blank(p1mod4 ? "xi_" + std::to_string(which) : "xi_" + std::to_string(which) + "'");
        CycNum zb = (which == 1) ? gs.zt : gs.z;
        CycNum zd = (which == 1) ? gs.z : gs.zt;
        ch.values[0] = half_plus;
        ch.values[1] = p1mod4 ? half_plus : -half_plus;
        ch.values[2] = -zb;
        ch.values[3] = -zd;
        ch.values[4] = p1mod4 ? -zb : zb;
        ch.values[5] = p1mod4 ? -zd : zd;
        for (long l = 1; l <= (p - 3) / 2; ++l) ch.values[a_base + l - 1] = CycNum(l % 2 == 0 ? 1 : -1);
        t.chars.push_back(std::move(ch));
    }
    // eta pair: degree (p-1)/2, supported on unipotent and f^m columns
    for (int which = 1; which <= 2; ++which) {
        Character ch = blank(p1mod4 ? "eta_" + std::to_string(which) : "eta_" + std::to_string(which) + "'");
        CycNum zb = (which == 1) ? gs.z : gs.zt;
        CycNum zd = (which == 1) ? gs.zt : gs.z;
        ch.values[0] = half_minus;
        ch.values[1] = p1mod4 ? -half_minus : half_minus;
        ch.values[2] = zb;
        ch.values[3] = zd;
        ch.values[4] = p1mod4 ? -zb : zb;
        ch.values[5] = p1mod4 ? -zd : zd;
        for (long m = 1; m <= (p - 1) / 2; ++m)
            ch.values[f_base + m - 1] = CycNum(m % 2 == 0 ? -1 : 1); // (-1)^{m+1}
        t.chars.push_back(std::move(ch));
    }
    finalize_degrees(t);
    return t;
}

Table table_PSL2(long p) {
    Table sl = table_SL2(p);
    Table t;
    t.kind = "PSL2";
    t.p = p;
    t.order = sl.order / 2;
    t.projective = true;
    t.group = sl.group;
    t.classes = sl.classes;

    // fuse SL columns under negation, keeping the first column of each pair
    std::vector<int> consumed(sl.num_cols(), 0);
    std::vector<int> chosen; // SL column backing each PSL column
    for (long c = 0; c < sl.num_cols(); ++c) {
        if (consumed[c]) continue;
        int partner = sl.column_of(sl.col_reps[c].neg());
        consumed[c] = consumed[partner] = 1;
        chosen.push_back((int)c);
        t.col_reps.push_back(sl.col_reps[c]);
        t.col_labels.push_back(sl.col_labels[c]);
        t.col_sizes.push_back(partner == (int)c ? sl.col_sizes[c] / 2 : sl.col_sizes[c]);
        if (sl.col_reps[c].is_identity()) t.identity_col = (long)chosen.size() - 1;
    }
    long total = 0;
    for (long s : t.col_sizes) total += s;
    if (total != t.order) throw std::logic_error("table_PSL2: class sizes do not sum to the order");

    for (const Character& ch : sl.chars) {
        if (ch.values[0] != ch.values[1]) continue; // chi(-1) != chi(1): not a PSL character
        Character out;
        out.name = (ch.name == "1") ? "1" : ch.name + "~";
        out.provenance = Provenance::RestrictedLift;
        for (int c : chosen) {
            // consistency: the lifted character agrees on both preimage classes
            int partner = sl.column_of(sl.col_reps[c].neg());
            if (ch.values[c] != ch.values[partner])
                throw std::logic_error("table_PSL2: character not constant on +-class pair");
            out.values.push_back(ch.values[c]);
        }
        t.chars.push_back(std::move(out));
    }
    if ((long)t.chars.size() != (long)t.col_reps.size())
        throw std::logic_error("table_PSL2: character count != class count");
    finalize_degrees(t);
    return t;
}

FusionMap fuse(const Table& parent, const Table& sub) {
    if (parent.projective || sub.projective) throw std::invalid_argument("fuse: projective table");
    if (!matgrp::subgroup_of(parent.group, sub.group))
        throw std::invalid_argument("fuse: not a subgroup");
    FusionMap f;
    f.to_parent_col.reserve(sub.num_cols());
    for (long c = 0; c < sub.num_cols(); ++c) f.to_parent_col.push_back(parent.column_of(sub.col_reps[c]));
    return f;
}

std::vector<CycNum> restrict_character(const std::vector<CycNum>& values, const FusionMap& fusion) {
    std::vector<CycNum> out;
    out.reserve(fusion.to_parent_col.size());
    for (int c : fusion.to_parent_col) out.push_back(values[c]);
    return out;
}

InductionData induction_data(const Table& parent, const Table& sub) {
    if (parent.projective || sub.projective)
        throw std::invalid_argument("induction_data: projective table");
    if (!matgrp::subgroup_of(parent.group, sub.group))
        throw std::invalid_argument("induction_data: not a subgroup");
    InductionData ind;
    ind.sub_order = sub.order;
    ind.hit_counts.assign(parent.num_cols(), std::vector<long>(sub.num_cols(), 0));
    const Group& g = parent.group;
    for (long c = 0; c < parent.num_cols(); ++c) {
        Mat rep = parent.col_reps[c];
        for (long i = 0; i < g.order(); ++i) {
            Mat x = g.element(i);
            Mat conj = x * rep * x.inverse();
            if (!sub.group.contains(conj)) continue;
            ind.hit_counts[c][sub.column_of(conj)] += 1;
        }
    }
    return ind;
}

std::vector<CycNum> induce_brute(const std::vector<CycNum>& psi, const InductionData& ind,
                                 const Table& parent) {
    std::vector<CycNum> out;
    out.reserve(parent.num_cols());
    Rational inv_h(1, ind.sub_order);
    inv_h.canonicalize();
    for (long c = 0; c < parent.num_cols(); ++c) {
        CycNum acc;
        for (size_t k = 0; k < ind.hit_counts[c].size(); ++k) {
            long n = ind.hit_counts[c][k];
            if (n == 0) continue;
            acc += CycNum(Rational(n) * inv_h) * psi[k];
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<CycNum> induce_brute(const std::vector<CycNum>& psi, const Table& sub,
                                 const Table& parent) {
    return induce_brute(psi, induction_data(parent, sub), parent);
}

std::optional<Rational> inner_product(const Table& tab, const std::vector<CycNum>& a,
                                      const std::vector<CycNum>& b) {
    cyclo::SumAccumulator acc;
    for (long c = 0; c < tab.num_cols(); ++c)
        acc.add_product(a[c], b[c].conj(), Rational(tab.col_sizes[c]));
    auto r = acc.as_rational();
    if (!r) return std::nullopt;
    Rational out = *r / Rational(tab.order);
    out.canonicalize();
    return out;
}

OrthoResult verify_orthogonality(const Table& tab) {
    long n = (long)tab.chars.size();
    auto fail = [](std::string s) { return OrthoResult{false, std::move(s)}; };
    // first orthogonality: <chi_i, chi_j> = delta_ij
    for (long i = 0; i < n; ++i) {
        for (long j = i; j < n; ++j) {
            auto r = inner_product(tab, tab.chars[i].values, tab.chars[j].values);
            Rational expect(i == j ? 1 : 0);
            if (!r || *r != expect)
                return fail("row orthogonality failed at (" + tab.chars[i].name + ", " +
                            tab.chars[j].name + ")");
        }
    }
    // second orthogonality: sum_chi chi(c) conj(chi(d)) = delta_cd * |C_G(c)|
    for (long c = 0; c < tab.num_cols(); ++c) {
        for (long d = c; d < tab.num_cols(); ++d) {
            cyclo::SumAccumulator acc;
            for (long i = 0; i < n; ++i)
                acc.add_product(tab.chars[i].values[c], tab.chars[i].values[d].conj(), Rational(1));
            auto r = acc.as_rational();
            Rational expect(0);
            if (c == d) {
                expect = Rational(tab.order) / Rational(tab.col_sizes[c]);
                expect.canonicalize();
            }
            if (!r || *r != expect)
                return fail("column orthogonality failed at (" + tab.col_labels[c] + ", " +
                            tab.col_labels[d] + ")");
        }
    }
    return {};
}

} // namespace sl2pairs::chartab
