#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace kzero {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: reduced, positive denominator

// n/d in canonical form. Throws DomainError when d == 0.
Rational make_rational(const Integer& n, const Integer& d = 1);

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

bool is_rational_square(const Rational& q);

bool is_squarefree(std::int64_t n);
bool is_prime(const Integer& n);

// Positive divisors of |n| in increasing order; n must be nonzero and
// |n| <= max_abs (ResourceError otherwise).
std::vector<Integer> positive_divisors(const Integer& n,
                                       const Integer& max_abs = Integer("100000000000000"));

// Distinct prime factors of |n| (n nonzero), increasing.
std::vector<Integer> prime_factors(const Integer& n);

Integer lcm(const Integer& a, const Integer& b);

// Floor division with the sign convention of mathematics (rounds toward -inf).
Integer floor_div(const Integer& a, const Integer& b);
// Least nonnegative residue of a mod m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace kzero
