#include "sl2pairs/cyclotomic.hpp"

#include "sl2pairs/numth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sl2pairs::cyclo {

namespace {

using numth::phi;
using numth::radical;

using ZPoly = std::vector<mpz_class>; // dense, index = degree

// ---------------------------------------------------------------- Phi_n ---

// Exact division of monic-divisor polynomials over Z.
ZPoly poly_div_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num;
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    if (dd < 0 || den[dd] != 1) throw std::logic_error("poly_div_exact: divisor not monic");
    ZPoly quot(dn - dd + 1, 0);
    for (long k = dn - dd; k >= 0; --k) {
        mpz_class c = rem[k + dd];
        quot[k] = c;
        if (c != 0)
            for (long i = 0; i <= dd; ++i) rem[k + i] -= c * den[i];
    }
    for (auto& c : rem)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

// Phi_n for squarefree n, by dividing x^n - 1 by all proper Phi_d.
const ZPoly& cyclo_poly_squarefree(long n) {
    static std::map<long, ZPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZPoly result;
    if (n == 1) {
        result = {-1, 1};
    } else {
        ZPoly num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (long d : numth::divisors(n))
            if (d < n) num = poly_div_exact(num, cyclo_poly_squarefree(d));
        result = std::move(num);
    }
    return cache.emplace(n, std::move(result)).first->second;
}

// Phi_n in general: Phi_n(x) = Phi_rad(n)(x^{n/rad(n)}).
ZPoly cyclo_poly(long n) {
    long r = radical(n), s = n / r;
    const ZPoly& base = cyclo_poly_squarefree(r);
    if (s == 1) return base;
    ZPoly out(s * ((long)base.size() - 1) + 1, 0);
    for (size_t i = 0; i < base.size(); ++i) out[s * i] = base[i];
    return out;
}

// ------------------------------------------------------------- contexts ---

using QVec = std::vector<Rational>;

constexpr long kRadicalTableLimit = 1100;  // eager power tables below this
constexpr long kConductorLimit = 20000;    // hard desk-scale guard

struct DescentSolver {
    long k = 0;                      // phi(n/q)
    std::vector<long> pivot_rows;    // k rows of the embedding matrix
    std::vector<QVec> inv;           // k x k inverse of the pivot submatrix
    std::vector<QVec> cols;          // full embedding matrix, k columns
};

struct Context {
    long n, deg;          // deg = phi(n)
    long rad, stride;     // n = rad * stride
    ZPoly cyclo;          // Phi_n
    std::vector<long> cyclo_support; // nonzero indices below deg
    std::vector<ZPoly> pow;          // squarefree contexts only: zeta^e residues
    std::map<long, DescentSolver> descent; // per prime q | n

    explicit Context(long m);
    const ZPoly& power(long e); // squarefree contexts, e in [0, n)
};

std::mutex g_mutex;
std::map<long, std::unique_ptr<Context>>& registry() {
    static std::map<long, std::unique_ptr<Context>> r;
    return r;
}

Context& ctx(long n) {
    auto& reg = registry();
    auto it = reg.find(n);
    if (it == reg.end()) {
        if (n < 1 || n > kConductorLimit)
            throw std::invalid_argument("cyclotomic conductor out of supported range");
        it = reg.emplace(n, std::make_unique<Context>(n)).first;
    }
    return *it->second;
}

Context::Context(long m) : n(m), deg(phi(m)), rad(radical(m)), stride(m / radical(m)) {
    cyclo = cyclo_poly(n);
    for (long i = 0; i < deg; ++i)
        if (cyclo[i] != 0) cyclo_support.push_back(i);
    if (rad == n) {
        // seed the monomial table with the basis itself
        pow.reserve(std::min(n, kRadicalTableLimit));
        for (long e = 0; e < deg; ++e) {
            ZPoly v(deg, 0);
            v[e] = 1;
            pow.push_back(std::move(v));
        }
    }
}

const ZPoly& Context::power(long e) {
    if (rad != n) throw std::logic_error("power(): squarefree contexts only");
    if (n > kRadicalTableLimit)
        throw std::invalid_argument("cyclotomic radical beyond desk scale");
    while ((long)pow.size() <= e) {
        const ZPoly& prev = pow.back();
        ZPoly next(deg, 0);
        for (long i = 0; i + 1 < deg; ++i) next[i + 1] = prev[i];
        mpz_class top = prev[deg - 1]; // coefficient now sitting at x^deg
        if (top != 0)
            for (long i : cyclo_support) next[i] -= top * cyclo[i];
        pow.push_back(std::move(next));
    }
    return pow[e];
}

// target += c * (zeta_n^e reduced mod Phi_n); e in [0, n).
// Reduction goes through the radical: with n = r*s, Phi_n(x) = Phi_r(x^s),
// so x^e = (x^s)^a * x^b lands on basis monomials x^{s*j+b}, j < phi(r).
void add_monomial(Context& c, QVec& target, long e, const Rational& coef) {
    if (e < c.deg) {
        target[e] += coef;
        return;
    }
    long b = e % c.stride, a = e / c.stride;
    Context& rc = ctx(c.rad);
    const ZPoly& rep = rc.power(a);
    for (long j = 0; j < rc.deg; ++j)
        if (rep[j] != 0) target[c.stride * j + b] += coef * Rational(rep[j]);
}

// target += scale * value, where value lives over conductor src_n | n.
void embed_add(Context& c, QVec& target, long src_n, const QVec& src, const Rational& scale) {
    long f = c.n / src_n;
    for (size_t i = 0; i < src.size(); ++i)
        if (src[i] != 0) add_monomial(c, target, (long)(i * f) % c.n, src[i] * scale);
}

const DescentSolver& descent_solver(Context& c, long q) {
    auto it = c.descent.find(q);
    if (it != c.descent.end()) return it->second;

    DescentSolver s;
    long sub = c.n / q;
    s.k = phi(sub);
    s.cols.assign(s.k, QVec(c.deg, Rational(0)));
    for (long j = 0; j < s.k; ++j)
        add_monomial(c, s.cols[j], (q * j) % c.n, Rational(1));

    // pick pivot rows by Gaussian elimination on the k x deg transpose
    std::vector<QVec> work(s.k, QVec(c.deg));
    for (long j = 0; j < s.k; ++j) work[j] = s.cols[j];
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < c.deg && row < s.k; ++col) {
        long sel = -1;
        for (long i = row; i < s.k; ++i)
            if (work[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(work[sel], work[row]);
        pivots.push_back(col);
        for (long i = 0; i < s.k; ++i) {
            if (i == row || work[i][col] == 0) continue;
            Rational f = work[i][col] / work[row][col];
            for (long cc = col; cc < c.deg; ++cc) work[i][cc] -= f * work[row][cc];
        }
        ++row;
    }
    if ((long)pivots.size() != s.k) throw std::logic_error("descent: embedding matrix rank deficient");
    s.pivot_rows = pivots;

    // invert the k x k pivot submatrix by Gauss-Jordan
    std::vector<QVec> a(s.k, QVec(2 * s.k, Rational(0)));
    for (long i = 0; i < s.k; ++i) {
        for (long j = 0; j < s.k; ++j) a[i][j] = s.cols[j][pivots[i]];
        a[i][s.k + i] = 1;
    }
    for (long col = 0; col < s.k; ++col) {
        long sel = -1;
        for (long i = col; i < s.k; ++i)
            if (a[i][col] != 0) { sel = i; break; }
        if (sel < 0) throw std::logic_error("descent: singular pivot submatrix");
        std::swap(a[sel], a[col]);
        Rational d = a[col][col];
        for (long j = 0; j < 2 * s.k; ++j) a[col][j] /= d;
        for (long i = 0; i < s.k; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (long j = 0; j < 2 * s.k; ++j) a[i][j] -= f * a[col][j];
        }
    }
    s.inv.assign(s.k, QVec(s.k));
    for (long i = 0; i < s.k; ++i)
        for (long j = 0; j < s.k; ++j) s.inv[i][j] = a[i][s.k + j];

    return c.descent.emplace(q, std::move(s)).first->second;
}

// If the value (n, v) lies in Q(zeta_{n/q}), return its coefficients there.
std::optional<QVec> try_descend(Context& c, long q, const QVec& v) {
    const DescentSolver& s = descent_solver(c, q);
    QVec sol(s.k, Rational(0));
    for (long i = 0; i < s.k; ++i)
        for (long j = 0; j < s.k; ++j)
            if (s.inv[i][j] != 0 && v[s.pivot_rows[j]] != 0)
                sol[i] += s.inv[i][j] * v[s.pivot_rows[j]];
    // verify the candidate reproduces the full vector
    QVec check(c.deg, Rational(0));
    for (long j = 0; j < s.k; ++j)
        if (sol[j] != 0)
            for (long r = 0; r < c.deg; ++r)
                if (s.cols[j][r] != 0) check[r] += sol[j] * s.cols[j][r];
    if (check != v) return std::nullopt;
    return sol;
}

bool all_zero(const QVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

QVec mul_raw(Context& c, const QVec& a, const QVec& b) {
    long d = c.deg;
    QVec conv(2 * d - 1, Rational(0));
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j)
            if (b[j] != 0) conv[i + j] += a[i] * b[j];
    }
    QVec out(d, Rational(0));
    for (long e = 0; e < (long)conv.size(); ++e)
        if (conv[e] != 0) add_monomial(c, out, e % c.n, conv[e]);
    return out;
}

} // namespace

// --------------------------------------------------------------- CycNum ---

void CycNum::normalize() {
    std::lock_guard<std::mutex> lock(g_mutex);
    for (;;) {
        if (conductor_ == 1) return;
        if (all_zero(coeffs_)) {
            conductor_ = 1;
            coeffs_.assign(1, Rational(0));
            return;
        }
        Context& c = ctx(conductor_);
        bool descended = false;
        for (long q : numth::prime_factors(conductor_)) {
            auto sol = try_descend(c, q, coeffs_);
            if (sol) {
                conductor_ /= q;
                coeffs_ = std::move(*sol);
                descended = true;
                break;
            }
        }
        if (!descended) return;
    }
}

CycNum make_cyc_raw(long n, std::vector<Rational> c) {
    if ((long)c.size() != phi(n)) throw std::invalid_argument("make_cyc_raw: wrong vector length");
    CycNum x(n, std::move(c));
    x.normalize();
    return x;
}

CycNum CycNum::root(long n, long k) {
    if (n < 1) throw std::invalid_argument("cyc_root: conductor must be positive");
    k %= n;
    if (k < 0) k += n;
    if (n == 1 || k == 0) return CycNum(1);
    QVec v;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        Context& c = ctx(n);
        v.assign(c.deg, Rational(0));
        add_monomial(c, v, k, Rational(1));
    }
    return make_cyc_raw(n, std::move(v));
}

bool CycNum::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

std::optional<Rational> CycNum::to_rational() const {
    if (conductor_ == 1) return coeffs_[0];
    return std::nullopt;
}

CycNum CycNum::conj() const {
    if (conductor_ == 1) return *this;
    QVec v;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        Context& c = ctx(conductor_);
        v.assign(c.deg, Rational(0));
        for (long i = 0; i < c.deg; ++i)
            if (coeffs_[i] != 0) add_monomial(c, v, (c.n - i) % c.n, coeffs_[i]);
    }
    return make_cyc_raw(conductor_, std::move(v));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) {
        QVec v = a.coeffs_;
        for (size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
        return make_cyc_raw(a.conductor_, std::move(v));
    }
    long m = numth::lcm(a.conductor_, b.conductor_);
    QVec v;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        Context& c = ctx(m);
        v.assign(c.deg, Rational(0));
        embed_add(c, v, a.conductor_, a.coeffs_, Rational(1));
        embed_add(c, v, b.conductor_, b.coeffs_, Rational(1));
    }
    return make_cyc_raw(m, std::move(v));
}

CycNum operator-(const CycNum& a) {
    QVec v = a.coeffs_;
    for (auto& c : v) c = -c;
    return CycNum(a.conductor_, std::move(v)); // negation preserves minimality
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == 1) {
        if (a.coeffs_[0] == 0) return CycNum();
        QVec v = b.coeffs_;
        for (auto& c : v) c *= a.coeffs_[0];
        return CycNum(b.conductor_, std::move(v)); // rational scaling preserves minimality
    }
    if (b.conductor_ == 1) return b * a;
    long m = numth::lcm(a.conductor_, b.conductor_);
    QVec v;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        Context& c = ctx(m);
        QVec ea(c.deg, Rational(0)), eb(c.deg, Rational(0));
        embed_add(c, ea, a.conductor_, a.coeffs_, Rational(1));
        embed_add(c, eb, b.conductor_, b.coeffs_, Rational(1));
        v = mul_raw(c, ea, eb);
    }
    return make_cyc_raw(m, std::move(v));
}

std::vector<Rational> CycNum::embedded_coeffs(long n) const {
    if (n % conductor_ != 0) throw std::invalid_argument("embedded_coeffs: not a multiple of conductor");
    std::lock_guard<std::mutex> lock(g_mutex);
    Context& c = ctx(n);
    QVec v(c.deg, Rational(0));
    embed_add(c, v, conductor_, coeffs_, Rational(1));
    return v;
}

std::string CycNum::to_string() const {
    if (conductor_ == 1) return rational_to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << rational_to_string(abs);
            continue;
        }
        if (abs != 1) os << rational_to_string(abs) << "*";
        os << "E(" << conductor_ << ")";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<double, double> CycNum::approx() const {
    double re = 0, im = 0;
    const double tau = 6.283185307179586476925286766559;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double c = coeffs_[i].get_d();
        re += c * std::cos(tau * (double)i / (double)conductor_);
        im += c * std::sin(tau * (double)i / (double)conductor_);
    }
    return {re, im};
}

// ------------------------------------------------------- SumAccumulator ---

void SumAccumulator::add_raw(long n, const std::vector<Rational>& c, const Rational& scale) {
    if (scale == 0) return;
    for (auto& [bn, bv] : buckets_) {
        if (bn == n) {
            for (size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0) bv[i] += c[i] * scale;
            return;
        }
        if (n % bn == 0) {
            // re-embed the existing bucket into the larger conductor
            std::lock_guard<std::mutex> lock(g_mutex);
            Context& cx = ctx(n);
            QVec up(cx.deg, Rational(0));
            embed_add(cx, up, bn, bv, Rational(1));
            embed_add(cx, up, n, c, scale);
            bn = n;
            bv = std::move(up);
            return;
        }
        if (bn % n == 0) {
            std::lock_guard<std::mutex> lock(g_mutex);
            Context& cx = ctx(bn);
            embed_add(cx, bv, n, c, scale);
            return;
        }
    }
    QVec v = c;
    for (auto& x : v) x *= scale;
    buckets_.emplace_back(n, std::move(v));
}

void SumAccumulator::add(const CycNum& x) {
    if (x.is_zero()) return;
    add_raw(x.conductor(), x.coeffs(), Rational(1));
}

void SumAccumulator::add_product(const CycNum& a, const CycNum& b, const Rational& scale) {
    if (scale == 0 || a.is_zero() || b.is_zero()) return;
    if (a.conductor() == 1) {
        add_raw(b.conductor(), b.coeffs(), a.coeffs()[0] * scale);
        return;
    }
    if (b.conductor() == 1) {
        add_raw(a.conductor(), a.coeffs(), b.coeffs()[0] * scale);
        return;
    }
    long m = numth::lcm(a.conductor(), b.conductor());
    QVec prod;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        Context& c = ctx(m);
        QVec ea(c.deg, Rational(0)), eb(c.deg, Rational(0));
        embed_add(c, ea, a.conductor(), a.coeffs(), Rational(1));
        embed_add(c, eb, b.conductor(), b.coeffs(), Rational(1));
        prod = mul_raw(c, ea, eb);
    }
    add_raw(m, prod, scale);
}

std::optional<Rational> SumAccumulator::as_rational() const {
    // Consolidate buckets until conductors pairwise share at most a factor
    // of 2; then Q(zeta_a) ^ Q(zeta_b) = Q and the sum is rational iff every
    // bucket is rational on its own.
    auto buckets = buckets_;
    for (;;) {
        bool merged = false;
        for (size_t i = 0; i < buckets.size() && !merged; ++i) {
            for (size_t j = i + 1; j < buckets.size() && !merged; ++j) {
                if (numth::gcd(buckets[i].first, buckets[j].first) <= 2) continue;
                long m = numth::lcm(buckets[i].first, buckets[j].first);
                std::lock_guard<std::mutex> lock(g_mutex);
                Context& c = ctx(m);
                QVec v(c.deg, Rational(0));
                embed_add(c, v, buckets[i].first, buckets[i].second, Rational(1));
                embed_add(c, v, buckets[j].first, buckets[j].second, Rational(1));
                buckets.erase(buckets.begin() + j);
                buckets[i] = {m, std::move(v)};
                merged = true;
            }
        }
        if (!merged) break;
    }
    Rational total(0);
    for (const auto& [n, v] : buckets) {
        CycNum x = make_cyc_raw(n, v);
        auto r = x.to_rational();
        if (!r) return std::nullopt;
        total += *r;
    }
    return total;
}

CycNum SumAccumulator::total() const {
    long m = 1;
    for (const auto& [n, v] : buckets_) m = numth::lcm(m, n);
    QVec acc;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        Context& c = ctx(m);
        acc.assign(c.deg, Rational(0));
        for (const auto& [n, v] : buckets_) embed_add(c, acc, n, v, Rational(1));
    }
    return make_cyc_raw(m, std::move(acc));
}

// ------------------------------------------------------------ rationals ---

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string rational_to_frac_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    r.canonicalize();
    return r;
}

// ----------------------------------------------------------- Gauss sums ---

GaussSums gauss_sums(long p, long t) {
    if (p == 2 || !numth::is_prime(p)) throw std::invalid_argument("gauss_sums: p must be an odd prime");
    if (numth::is_quadratic_residue(t, p) || t % p == 0)
        throw std::invalid_argument("gauss_sums: t must be a quadratic non-residue mod p");
    long lambda = numth::primitive_root(p);
    CycNum z, zt;
    long e = 1; // lambda^0
    long step = lambda * lambda % p;
    for (long l = 0; l <= (p - 3) / 2; ++l) {
        z += CycNum::root(p, e);
        zt += CycNum::root(p, t % p * e % p);
        e = e * step % p;
    }
    return {z, zt};
}

GaussSums gauss_sums(long p) {
    if (p == 2 || !numth::is_prime(p)) throw std::invalid_argument("gauss_sums: p must be an odd prime");
    return gauss_sums(p, numth::smallest_non_residue(p));
}

} // namespace sl2pairs::cyclo
