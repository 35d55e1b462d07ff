#pragma once

#include <vector>

#include "kzero/int_poly.hpp"

namespace kzero {

/// Factorization of a monic integer quartic into monic irreducible
/// factors over Z (equivalently over Q, by Gauss). A single factor equal
/// to the input is the irreducibility certificate: no rational root
/// exists and no divisor pair (b, e) of the constant term admits a
/// quadratic splitting.
struct QuarticFactorization {
  IntPoly input;
  std::vector<IntPoly> factors;  // sorted by degree, then coefficients

  bool irreducible() const { return factors.size() == 1; }
  IntPoly product() const;
};

// Requires a monic polynomial of degree exactly 4 (DomainError otherwise).
QuarticFactorization factor_quartic(const IntPoly& f);

// Irreducibility over Q of a monic integer polynomial of degree <= 4.
bool is_irreducible_monic(const IntPoly& f);

// Integer roots of a monic integer polynomial (with multiplicity not
// recorded), by divisors of the constant term.
std::vector<Integer> integer_roots(const IntPoly& f);

}  // namespace kzero
