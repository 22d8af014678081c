#pragma once

#include <cstdint>
#include <vector>

// Elementary number theory over machine integers. Everything here operates
// at desk scale (arguments well below 2^31), which is all the rest of the
// library ever needs.

namespace sl2pairs::numth {

bool is_prime(long n);

long gcd(long a, long b);
long lcm(long a, long b);

/// Euler totient.
long phi(long n);

/// All positive divisors of n, ascending.
std::vector<long> divisors(long n);

/// Distinct prime factors of n, ascending.
std::vector<long> prime_factors(long n);

/// Product of the distinct prime factors of n.
long radical(long n);

long mod_pow(long base, long exp, long m);
long mod_inv(long a, long m);

/// Multiplicative order of a modulo m; requires gcd(a,m)=1.
long mod_order(long a, long m);

/// Smallest primitive root modulo an odd prime p.
long primitive_root(long p);

/// True iff a is a nonzero square modulo the odd prime p.
bool is_quadratic_residue(long a, long p);

/// Smallest quadratic non-residue modulo the odd prime p.
long smallest_non_residue(long p);

} // namespace sl2pairs::numth
