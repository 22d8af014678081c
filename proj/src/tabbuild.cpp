#include "sl2pairs/tabbuild.hpp"

#include "sl2pairs/numth.hpp"
#include "sl2pairs/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sl2pairs::tabbuild {

using chartab::Character;
using chartab::CycNum;
using chartab::Provenance;
using chartab::Rational;
using chartab::Table;
using matgrp::Group;
using matgrp::Mat;
using matgrp::mat_pow;

namespace {

std::string values_key(const std::vector<CycNum>& v) {
    std::string s;
    for (const auto& x : v) {
        s += x.to_string();
        s += '|';
    }
    return s;
}

long require_integer(const std::optional<Rational>& r, const char* what) {
    if (!r || r->get_den() != 1)
        throw std::logic_error(std::string(what) + ": non-integral character inner product");
    return r->get_num().get_si();
}

} // namespace

Table table_cyclic(const Group& h, const std::string& kind) {
    long n = h.order();
    long gen_idx = -1;
    for (long i = 0; i < n && gen_idx < 0; ++i)
        if (matgrp::element_order(h.element(i)) == n) gen_idx = i;
    if (gen_idx < 0) throw std::invalid_argument("table_cyclic: group is not cyclic");
    Table t = chartab::table_skeleton(kind.empty() ? "C_" + std::to_string(n) : kind, h);
    if (t.num_cols() != n) throw std::logic_error("table_cyclic: non-singleton classes");

    std::vector<long> dlog(n, -1); // element index -> exponent
    Mat g0 = h.element(gen_idx);
    Mat x = Mat::identity(h.p);
    for (long e = 0; e < n; ++e) {
        dlog[h.index_of_id(x.id())] = e;
        x = x * g0;
    }
    for (long k = 0; k < n; ++k) {
        Character ch;
        ch.name = "psi_" + std::to_string(k);
        ch.provenance = Provenance::Computed;
        ch.values.reserve(n);
        for (long c = 0; c < n; ++c) {
            long e = dlog[h.index_of_id(t.col_reps[c].id())];
            ch.values.push_back(CycNum::root(n, e * k));
        }
        t.chars.push_back(std::move(ch));
    }
    chartab::finalize_degrees(t);
    return t;
}

Table table_borel_subgroup(long p, long s) {
    if (p < 5 || !numth::is_prime(p)) throw std::invalid_argument("table_borel_subgroup: need prime p >= 5");
    if (s < 1 || (p - 1) % s != 0) throw std::invalid_argument("table_borel_subgroup: s must divide p-1");
    auto sg = matgrp::standard_generators(p);
    Mat as = mat_pow(sg.a, s);
    Group h = matgrp::generate(p, {as, sg.b});
    long n = (p - 1) / s;
    if (h.order() != n * p) throw std::logic_error("table_borel_subgroup: unexpected order");
    Table t = chartab::table_skeleton(s == 1 ? "U" : "H_" + std::to_string(s), h);

    // linear characters, lifted from <a^s>: determined by the diagonal
    std::vector<long> diag_dlog(p, -1);
    long base = numth::mod_pow(sg.lambda, s, p), v = 1;
    for (long j = 0; j < n; ++j) {
        diag_dlog[v] = j;
        v = v * base % p;
    }
    for (long k = 0; k < n; ++k) {
        Character ch;
        ch.name = "psi_" + std::to_string(k);
        ch.provenance = Provenance::Computed;
        for (long c = 0; c < t.num_cols(); ++c) {
            long j = diag_dlog[t.col_reps[c].e[0]];
            if (j < 0) throw std::logic_error("table_borel_subgroup: bad diagonal");
            ch.values.push_back(CycNum::root(n, j * k));
        }
        t.chars.push_back(std::move(ch));
    }

    // the rest are induced from the abelian subgroup K<b>, K the kernel of
    // the conjugation action of a^s on <b> (b ^ a^s = b^{lambda^{2s}})
    long u = numth::mod_pow(sg.lambda, 2 * s, p);
    long m = (u == 1) ? 1 : numth::mod_order(u, p);
    Group kb = matgrp::generate(p, {mat_pow(sg.a, s * m), sg.b});
    Table tkb = table_cyclic(kb);
    auto ind = chartab::induction_data(t, tkb);
    std::map<std::string, bool> seen;
    for (const auto& ch : t.chars) seen[values_key(ch.values)] = true;
    long next = 0;
    for (const auto& psi : tkb.chars) {
        auto row = chartab::induce_brute(psi.values, ind, t);
        auto nrm = chartab::inner_product(t, row, row);
        if (require_integer(nrm, "table_borel_subgroup") != 1) continue;
        std::string key = values_key(row);
        if (seen.count(key)) continue;
        seen[key] = true;
        Character ch;
        ch.name = "pi_" + std::to_string(next++);
        ch.provenance = Provenance::Induced;
        ch.values = std::move(row);
        t.chars.push_back(std::move(ch));
    }
    if ((long)t.chars.size() != t.num_cols())
        throw std::logic_error("table_borel_subgroup: incomplete table for s=" + std::to_string(s));
    chartab::finalize_degrees(t);
    auto ortho = chartab::verify_orthogonality(t);
    if (!ortho.ok) throw std::logic_error("table_borel_subgroup: " + ortho.detail);
    return t;
}

// --------------------------------------------------------------- builder ---

namespace {

// All degree-1 characters of t.group: candidate generator images are roots
// of unity of dividing order; a candidate is kept when the value labelling
// propagates consistently over the whole Cayley graph.
std::vector<std::vector<CycNum>> linear_characters(const Table& t) {
    const Group& h = t.group;
    long n = h.order();
    std::vector<std::vector<CycNum>> out;
    if (n == 1) {
        out.push_back({CycNum(1)});
        return out;
    }
    const auto& gens = h.gens;
    std::vector<long> ords;
    for (const Mat& g : gens) ords.push_back(matgrp::element_order(g));
    std::vector<long> k(gens.size(), 0);
    long id_idx = h.index_of_id(Mat::identity(h.p).id());
    std::map<std::string, bool> seen;
    for (;;) {
        std::vector<CycNum> gen_vals;
        for (size_t i = 0; i < gens.size(); ++i) gen_vals.push_back(CycNum::root(ords[i], k[i]));
        std::vector<CycNum> val(n, CycNum(0));
        std::vector<char> done(n, 0);
        std::deque<long> queue{id_idx};
        val[id_idx] = CycNum(1);
        done[id_idx] = 1;
        bool ok = true;
        while (ok && !queue.empty()) {
            long i = queue.front();
            queue.pop_front();
            Mat mi = h.element(i);
            for (size_t gi = 0; gi < gens.size() && ok; ++gi) {
                long j = h.index_of_id((mi * gens[gi]).id());
                CycNum cand = val[i] * gen_vals[gi];
                if (!done[j]) {
                    val[j] = cand;
                    done[j] = 1;
                    queue.push_back(j);
                } else if (val[j] != cand) {
                    ok = false;
                }
            }
        }
        if (ok) {
            std::vector<CycNum> row;
            for (long c = 0; c < t.num_cols(); ++c)
                row.push_back(val[h.index_of_id(t.col_reps[c].id())]);
            std::string key = values_key(row);
            if (!seen.count(key)) {
                seen[key] = true;
                out.push_back(std::move(row));
            }
        }
        // next multi-index
        size_t pos = 0;
        while (pos < k.size()) {
            if (++k[pos] < ords[pos]) break;
            k[pos] = 0;
            ++pos;
        }
        if (pos == k.size()) break;
    }
    return out;
}

using QMat = std::vector<std::vector<Rational>>;

// Gram-only Gram-Schmidt data for LLL.
struct GSData {
    QMat mu;
    std::vector<Rational> bnorm; // |b*_i|^2
};

GSData gram_schmidt(const QMat& gram) {
    long r = (long)gram.size();
    GSData gs;
    gs.mu.assign(r, std::vector<Rational>(r, Rational(0)));
    gs.bnorm.assign(r, Rational(0));
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < i; ++j) {
            Rational x = gram[i][j];
            for (long l = 0; l < j; ++l) x -= gs.mu[i][l] * gs.mu[j][l] * gs.bnorm[l];
            if (gs.bnorm[j] == 0) throw std::logic_error("gram_schmidt: dependent basis");
            gs.mu[i][j] = x / gs.bnorm[j];
        }
        Rational b = gram[i][i];
        for (long l = 0; l < i; ++l) b -= gs.mu[i][l] * gs.mu[i][l] * gs.bnorm[l];
        gs.bnorm[i] = b;
    }
    return gs;
}

mpz_class round_rational(const Rational& x) {
    // nearest integer, ties toward zero are fine for LLL size reduction
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r > den) q += 1;
    return q;
}

// In-place LLL (delta = 3/4) on a basis given by its Gram matrix; `coords`
// rows are carried through the same row operations.
void lll_reduce(QMat& gram, QMat& coords) {
    long r = (long)gram.size();
    if (r <= 1) return;
    auto row_sub = [&](long i, const mpz_class& q, long j) {
        Rational qq(q);
        for (long c = 0; c < (long)coords[i].size(); ++c) coords[i][c] -= qq * coords[j][c];
        for (long c = 0; c < r; ++c) gram[i][c] -= qq * gram[j][c];
        for (long c = 0; c < r; ++c) gram[c][i] -= qq * gram[c][j];
    };
    auto row_swap = [&](long i, long j) {
        std::swap(coords[i], coords[j]);
        std::swap(gram[i], gram[j]);
        for (long c = 0; c < r; ++c) std::swap(gram[c][i], gram[c][j]);
    };
    const Rational delta(3, 4);
    long k = 1;
    GSData gs = gram_schmidt(gram);
    while (k < r) {
        for (long j = k - 1; j >= 0; --j) {
            mpz_class q = round_rational(gs.mu[k][j]);
            if (q != 0) {
                row_sub(k, q, j);
                gs = gram_schmidt(gram);
            }
        }
        Rational lhs = gs.bnorm[k];
        Rational rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bnorm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            row_swap(k, k - 1);
            gs = gram_schmidt(gram);
            k = std::max(1L, k - 1);
        }
    }
}

// All x in Z^r with x^T gram x == 1, up to sign (first nonzero coordinate
// positive). Fincke-Pohst with exact rational arithmetic.
std::vector<std::vector<long>> unit_vectors(const QMat& gram) {
    long r = (long)gram.size();
    // rational Cholesky: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    QMat q(r, std::vector<Rational>(r, Rational(0)));
    for (long i = 0; i < r; ++i)
        for (long j = i; j < r; ++j) q[i][j] = gram[i][j];
    for (long i = 0; i < r; ++i) {
        for (long j = i + 1; j < r; ++j) {
            Rational f = q[i][j] / q[i][i];
            for (long l = j; l < r; ++l) q[j][l] -= f * q[i][l];
            q[i][j] = f;
        }
    }
    std::vector<std::vector<long>> found;
    std::vector<long> x(r, 0);
    // depth-first from the last coordinate; budget T is what remains of 1
    std::function<void(long, Rational)> dfs = [&](long i, Rational budget) {
        if (i < 0) {
            Rational total = Rational(1) - budget; // accumulated quadratic value
            if (total == 1) {
                bool nonzero = false;
                for (long v : x)
                    if (v != 0) nonzero = true;
                if (!nonzero) return;
                for (long v : x) {
                    if (v == 0) continue;
                    if (v > 0) found.push_back(x);
                    break;
                }
            }
            return;
        }
        Rational center(0);
        for (long j = i + 1; j < r; ++j) center += q[i][j] * Rational(x[j]);
        // enumerate integers t with q_ii (t + center)^2 <= budget
        auto fits = [&](long t) {
            Rational s = Rational(t) + center;
            return q[i][i] * s * s <= budget;
        };
        // walk outward from the rounded center
        long c0 = (long)round_rational(-center).get_si();
        for (long t = c0; fits(t); --t) {
            Rational s = Rational(t) + center;
            x[i] = t;
            dfs(i - 1, budget - q[i][i] * s * s);
        }
        for (long t = c0 + 1; fits(t); ++t) {
            Rational s = Rational(t) + center;
            x[i] = t;
            dfs(i - 1, budget - q[i][i] * s * s);
        }
        x[i] = 0;
    };
    dfs(r - 1, Rational(1));
    return found;
}

std::mutex g_memo_mutex;
std::map<std::pair<long, std::vector<uint32_t>>, Table>& memo() {
    static std::map<std::pair<long, std::vector<uint32_t>>, Table> m;
    return m;
}

Table build_table_impl(const Group& h) {
    // cyclic groups (including the trivial one) go the direct route
    for (long i = 0; i < h.order(); ++i)
        if (matgrp::element_order(h.element(i)) == h.order()) return table_cyclic(h);

    Table t = chartab::table_skeleton("order" + std::to_string(h.order()), h);
    long k = t.num_cols();

    // character pool: the linear characters of h plus everything induced
    // from proper subgroups (full tables, built recursively). Monomiality
    // of nilpotent groups plus Brauer induction make this pool generate
    // the whole character lattice over Z.
    std::vector<std::vector<CycNum>> pool = linear_characters(t);
    for (const Group& s : subgrp::lattice_classes(h)) {
        if (s.order() == h.order()) continue;
        Table ts = build_table(s);
        auto ind = chartab::induction_data(t, ts);
        for (const auto& psi : ts.chars) pool.push_back(chartab::induce_brute(psi.values, ind, t));
    }
    {
        std::map<std::string, bool> seen;
        std::vector<std::vector<CycNum>> dedup;
        for (auto& row : pool) {
            std::string key = values_key(row);
            if (seen.count(key)) continue;
            seen[key] = true;
            dedup.push_back(std::move(row));
        }
        pool = std::move(dedup);
    }

    long np = (long)pool.size();
    QMat gram(np, std::vector<Rational>(np, Rational(0)));
    for (long i = 0; i < np; ++i)
        for (long j = i; j < np; ++j) {
            long v = require_integer(chartab::inner_product(t, pool[i], pool[j]), "build_table");
            gram[i][j] = gram[j][i] = Rational(v);
        }

    // greedy maximal independent subset (abstract Gram-Schmidt)
    std::vector<long> basis;            // pool indices
    QMat star_expansion;                // b*_i as rational combo of pool[basis]
    std::vector<Rational> star_norm;
    auto dot_with_star = [&](long j, long si) {
        Rational x(0);
        for (size_t l = 0; l < star_expansion[si].size(); ++l)
            if (star_expansion[si][l] != 0) x += star_expansion[si][l] * gram[j][basis[l]];
        return x;
    };
    for (long j = 0; j < np && (long)basis.size() < k; ++j) {
        std::vector<Rational> mu;
        Rational res = gram[j][j];
        for (size_t i = 0; i < basis.size(); ++i) {
            Rational d = dot_with_star(j, (long)i);
            Rational m = d / star_norm[i];
            mu.push_back(m);
            res -= m * d;
        }
        if (res == 0) continue;
        std::vector<Rational> exp(basis.size() + 1, Rational(0));
        exp[basis.size()] = 1;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t l = 0; l < star_expansion[i].size(); ++l)
                exp[l] -= mu[i] * star_expansion[i][l];
        basis.push_back(j);
        for (auto& row : star_expansion) row.resize(basis.size(), Rational(0));
        star_expansion.push_back(std::move(exp));
        star_norm.push_back(res);
    }
    long r = (long)basis.size();
    if (r != k)
        throw std::logic_error("build_table: induced characters span rank " + std::to_string(r) +
                               " but there are " + std::to_string(k) + " classes");

    // rational coordinates of every pool vector over pool[basis]
    QMat gii(r, std::vector<Rational>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) gii[i][j] = gram[basis[i]][basis[j]];
    // invert gii (Gauss-Jordan)
    QMat inv(r, std::vector<Rational>(r, Rational(0)));
    {
        QMat a = gii;
        for (long i = 0; i < r; ++i) inv[i][i] = 1;
        for (long col = 0; col < r; ++col) {
            long sel = -1;
            for (long i = col; i < r; ++i)
                if (a[i][col] != 0) { sel = i; break; }
            if (sel < 0) throw std::logic_error("build_table: singular Gram");
            std::swap(a[sel], a[col]);
            std::swap(inv[sel], inv[col]);
            Rational d = a[col][col];
            for (long j = 0; j < r; ++j) {
                a[col][j] /= d;
                inv[col][j] /= d;
            }
            for (long i = 0; i < r; ++i) {
                if (i == col || a[i][col] == 0) continue;
                Rational f = a[i][col];
                for (long j = 0; j < r; ++j) {
                    a[i][j] -= f * a[col][j];
                    inv[i][j] -= f * inv[col][j];
                }
            }
        }
    }
    QMat coords(np, std::vector<Rational>(r, Rational(0)));
    mpz_class den_lcm = 1;
    for (long j = 0; j < np; ++j) {
        for (long i = 0; i < r; ++i) {
            Rational x(0);
            for (long l = 0; l < r; ++l)
                if (inv[i][l] != 0) x += inv[i][l] * gram[basis[l]][j];
            coords[j][i] = x;
            mpz_class d = x.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    }

    // integer matrix (scaled by den_lcm), then Hermite-style row reduction
    std::vector<std::vector<mpz_class>> M(np, std::vector<mpz_class>(r));
    for (long j = 0; j < np; ++j)
        for (long i = 0; i < r; ++i) {
            Rational x = coords[j][i] * Rational(den_lcm);
            if (x.get_den() != 1) throw std::logic_error("build_table: denominator scaling failed");
            M[j][i] = x.get_num();
        }
    long row = 0;
    for (long col = 0; col < r; ++col) {
        for (;;) {
            long sel = -1;
            for (long i = row; i < np; ++i)
                if (M[i][col] != 0 && (sel < 0 || abs(M[i][col]) < abs(M[sel][col]))) sel = i;
            if (sel < 0) break;
            std::swap(M[sel], M[row]);
            bool clean = true;
            for (long i = row + 1; i < np; ++i) {
                if (M[i][col] == 0) continue;
                mpz_class q = M[i][col] / M[row][col]; // truncated division
                for (long c2 = 0; c2 < r; ++c2) M[i][c2] -= q * M[row][c2];
                if (M[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (row < np && M[row][col] != 0) ++row;
    }
    if (row != r) throw std::logic_error("build_table: HNF rank mismatch");

    // lattice basis rows (coords over pool[basis], unscaled) and their Gram
    QMat bcoords(r, std::vector<Rational>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            bcoords[i][j] = Rational(M[i][j]) / Rational(den_lcm);
            bcoords[i][j].canonicalize();
        }
    auto gram_of = [&](const QMat& c) {
        long nn = (long)c.size();
        QMat g(nn, std::vector<Rational>(nn, Rational(0)));
        for (long i = 0; i < nn; ++i)
            for (long j = 0; j < nn; ++j) {
                Rational x(0);
                for (long a = 0; a < r; ++a) {
                    if (c[i][a] == 0) continue;
                    for (long b = 0; b < r; ++b)
                        if (c[j][b] != 0) x += c[i][a] * c[j][b] * gii[a][b];
                }
                g[i][j] = x;
            }
        return g;
    };
    QMat bgram = gram_of(bcoords);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            if (bgram[i][j].get_den() != 1)
                throw std::logic_error("build_table: lattice Gram not integral");

    lll_reduce(bgram, bcoords);
    auto units = unit_vectors(bgram);

    // map unit lattice vectors back to value rows
    std::vector<Character> found;
    std::map<std::string, bool> seen;
    for (const auto& x : units) {
        std::vector<Rational> pc(r, Rational(0)); // coords over pool[basis]
        for (long i = 0; i < r; ++i) {
            if (x[i] == 0) continue;
            for (long j = 0; j < r; ++j) pc[j] += Rational(x[i]) * bcoords[i][j];
        }
        std::vector<CycNum> row(k, CycNum(0));
        for (long j = 0; j < r; ++j) {
            if (pc[j] == 0) continue;
            CycNum cj{pc[j]};
            for (long c = 0; c < k; ++c) row[c] += cj * pool[basis[j]][c];
        }
        auto deg = row[t.identity_col].to_rational();
        if (!deg || *deg == 0) throw std::logic_error("build_table: unit vector with zero degree");
        if (*deg < 0)
            for (auto& v : row) v = -v;
        std::string key = values_key(row);
        if (seen.count(key)) continue;
        seen[key] = true;
        Character ch;
        ch.provenance = Provenance::Computed;
        ch.values = std::move(row);
        found.push_back(std::move(ch));
    }
    if ((long)found.size() != k)
        throw std::logic_error("build_table: found " + std::to_string(found.size()) +
                               " irreducibles for " + std::to_string(k) + " classes");

    std::sort(found.begin(), found.end(), [&](const Character& a, const Character& b) {
        auto da = a.values[t.identity_col].to_rational(), db = b.values[t.identity_col].to_rational();
        if (*da != *db) return *da < *db;
        return values_key(a.values) < values_key(b.values);
    });
    for (long i = 0; i < k; ++i) {
        found[i].name = "chi_" + std::to_string(i + 1);
        t.chars.push_back(std::move(found[i]));
    }
    chartab::finalize_degrees(t);
    long sumsq = 0;
    for (const auto& ch : t.chars) sumsq += ch.degree * ch.degree;
    if (sumsq != h.order()) throw std::logic_error("build_table: degree squares do not sum to |G|");
    auto ortho = chartab::verify_orthogonality(t);
    if (!ortho.ok) throw std::logic_error("build_table: " + ortho.detail);
    return t;
}

} // namespace

Table build_table(const Group& h, const std::string& kind) {
    std::pair<long, std::vector<uint32_t>> key{h.p, h.ids};
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = memo().find(key);
        if (it != memo().end()) {
            Table t = it->second;
            if (!kind.empty()) t.kind = kind;
            return t;
        }
    }
    Table t = build_table_impl(h);
    if (!kind.empty()) t.kind = kind;
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        memo().emplace(key, t);
    }
    return t;
}

} // namespace sl2pairs::tabbuild
