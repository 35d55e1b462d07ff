#pragma once

#include <vector>

#include "kzero/frac_ideal.hpp"

namespace kzero {

inline const Integer kDefaultDiscBound = 1'000'000;

struct ClassGroup {
  Integer discriminant;
  Integer class_number;
  // Invariant factors d1 | d2 | ... | dk, all > 1; empty for the trivial group.
  std::vector<Integer> invariants;
  // Prime ideals whose classes generate the group, each enlarging the
  // subgroup spanned by its predecessors.
  std::vector<FracIdeal> generators;
  std::vector<IdealClass> elements;  // sorted

  std::string structure() const;  // "Z/2", "Z/2 x Z/2", "trivial"
};

// Largest rational prime whose prime ideals the class group search must
// examine: floor(sqrt(D)/2) for real orders and an upper bound of
// floor((2/pi) sqrt|D|) for imaginary ones.
Integer minkowski_prime_bound(const QuadOrder& order);

// Prime ideals of norm p for primes p <= bound, in order of (p, b).
// Inert primes contribute nothing (pO is principal).
std::vector<FracIdeal> split_prime_ideals(const QuadOrder& order, const Integer& bound);

/// Class group of a maximal order: classes of the prime ideals below the
/// Minkowski bound, closed under multiplication. ResourceError when
/// |disc| exceeds max_abs_disc.
ClassGroup class_group(const QuadOrder& order, const Integer& max_abs_disc = kDefaultDiscBound);

}  // namespace kzero
