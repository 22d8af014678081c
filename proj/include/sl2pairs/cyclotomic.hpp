#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2pairs::cyclo {

/// Exact rational number, always canonical (lowest terms, positive
/// denominator). GMP's mpq_class maintains that invariant for us.
using Rational = mpq_class;

std::string rational_to_string(const Rational& r);          // "n" or "n/d"
std::string rational_to_frac_string(const Rational& r);     // always "n/d"
Rational parse_rational(const std::string& s);

/// n/d in lowest terms (mpq_class's two-argument constructor does not
/// canonicalize on its own).
inline Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// An element of a cyclotomic field Q(zeta_N), stored as the residue of a
/// polynomial in zeta_N modulo the N-th cyclotomic polynomial Phi_N.
///
/// Canonical form is unique: the conductor is minimal (no proper subfield
/// Q(zeta_d), d | N, contains the value) and the coefficient vector has
/// length phi(N). Equality is therefore plain field-by-field comparison.
/// Values are immutable in spirit: all arithmetic returns fresh objects.
class CycNum {
public:
    CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit CycNum(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    explicit CycNum(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    /// zeta_N^k (k taken mod N).
    static CycNum root(long n, long k);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }

    /// The rational value, or nullopt if the number is irrational.
    std::optional<Rational> to_rational() const;

    CycNum conj() const;

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a);
    CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Display form, GAP-flavoured: "0", "3/2", "E(5)+2*E(5)^3", ...
    std::string to_string() const;

    /// Floating-point embedding zeta_N -> exp(2*pi*i/N). Display only;
    /// carries no correctness contract.
    std::pair<double, double> approx() const;

    /// Raw coefficient vector of this value over Q(zeta_n); n must be a
    /// multiple of the conductor. Used by serialization and tests.
    std::vector<Rational> embedded_coeffs(long n) const;

private:
    long conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor_)

    CycNum(long n, std::vector<Rational> c) : conductor_(n), coeffs_(std::move(c)) {}
    void normalize();

    friend class SumAccumulator;
    friend CycNum make_cyc_raw(long n, std::vector<Rational> c);
};

/// Builds a CycNum from a raw coefficient vector over Q(zeta_n)
/// (length phi(n)), reducing to canonical minimal form.
CycNum make_cyc_raw(long n, std::vector<Rational> c);

/// Accumulates a sum of CycNum terms. Terms are grouped by the conductor
/// they live in, so sums mixing e.g. Q(zeta_{p-1}), Q(zeta_p) and
/// Q(zeta_{p+1}) never materialize in the huge composite field unless the
/// total is requested as a CycNum.
///
/// Rationality extraction uses the conductor-support decomposition of
/// cyclotomic fields: Q(zeta_a) and Q(zeta_b) intersect in Q(zeta_gcd(a,b)),
/// so once the bucket conductors are pairwise coprime up to a factor of 2,
/// the sum is rational iff every bucket is.
class SumAccumulator {
public:
    void add(const CycNum& x);
    void add_product(const CycNum& a, const CycNum& b, const Rational& scale);

    /// Rational value of the sum, or nullopt if it is irrational.
    std::optional<Rational> as_rational() const;

    /// Full sum as a CycNum (may promote into a large common conductor).
    CycNum total() const;

private:
    // conductor -> partial sum over that conductor (raw vectors)
    std::vector<std::pair<long, std::vector<Rational>>> buckets_;
    void add_raw(long n, const std::vector<Rational>& c, const Rational& scale);
};

/// The quadratic Gauss sums of section-2 character theory:
///   Z  = sum over quadratic residues r mod p of zeta_p^r
///   Zt = sum over non-residue multiples t*r of zeta_p^{t r}
/// with t the canonical (smallest) non-residue. Throws on p = 2 or on a
/// square t.
struct GaussSums {
    CycNum z;
    CycNum zt;
};
GaussSums gauss_sums(long p, long t);
GaussSums gauss_sums(long p); // canonical t

} // namespace sl2pairs::cyclo
