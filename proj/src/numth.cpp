#include "sl2pairs/numth.hpp"

#include <stdexcept>

namespace sl2pairs::numth {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long gcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

long phi(long n) {
    long result = n;
    for (long p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long radical(long n) {
    long r = 1;
    for (long p : prime_factors(n)) r *= p;
    return r;
}

long mod_pow(long base, long exp, long m) {
    if (m == 1) return 0;
    base %= m;
    if (base < 0) base += m;
    long result = 1;
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

long mod_inv(long a, long m) {
    a %= m;
    if (a < 0) a += m;
    long g = gcd(a, m);
    if (g != 1) throw std::invalid_argument("mod_inv: not invertible");
    // extended Euclid
    long old_r = a, r = m, old_s = 1, s = 0;
    while (r) {
        long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    long inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

long mod_order(long a, long m) {
    a %= m;
    if (a < 0) a += m;
    if (gcd(a, m) != 1) throw std::invalid_argument("mod_order: gcd(a,m) != 1");
    long x = a % m, ord = 1;
    while (x != 1 % m) {
        x = x * a % m;
        ++ord;
        if (ord > m) throw std::logic_error("mod_order: did not terminate");
    }
    return ord;
}

long primitive_root(long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("primitive_root: need odd prime");
    auto qs = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs)
            if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

bool is_quadratic_residue(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return false;
    return mod_pow(a, (p - 1) / 2, p) == 1;
}

long smallest_non_residue(long p) {
    for (long t = 2; t < p; ++t)
        if (!is_quadratic_residue(t, p)) return t;
    throw std::invalid_argument("smallest_non_residue: no non-residue (p must be odd prime > 2)");
}

} // namespace sl2pairs::numth
