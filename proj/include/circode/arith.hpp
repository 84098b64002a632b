#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace circode {

// Element/modulus value type. Moduli up to 2^31 are supported for set
// algebra; products m*n computed by the lift operators must also fit.
using Elem = std::int64_t;

Elem gcd(Elem a, Elem b);

// Divisors of n in increasing order. n >= 1.
std::vector<Elem> divisors(Elem n);

bool is_prime(Elem p);

// p^e with an overflow guard (throws invalid-input on overflow).
Elem ipow(Elem p, int e);

// Exponent e with p^e == x, or -1 if x is not a power of p. x >= 1, p >= 2.
int log_exact(Elem x, Elem p);

// Prime factorisation as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<Elem, int>> factorize(Elem n);

// Number of distinct prime divisors of n (nu in inclusion-exclusion sums).
int prime_nu(Elem n);

// Square-free divisors of n greater than 1 and coprime to p, increasing.
std::vector<Elem> square_free_divisors_coprime(Elem n, Elem p);

// Binomial coefficient, saturating at cap (used for sweep budgeting).
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

}  // namespace circode
