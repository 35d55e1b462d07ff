#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kzero/int_poly.hpp"
#include "kzero/quad_element.hpp"

namespace kzero {

struct Eigenvalue {
  Integer p;
  QuadElement a;  // a_p in the Hecke field
};

/// Hecke data of a weight-2 newform with real quadratic coefficient field.
struct NewformDatum {
  Integer level;
  std::int64_t hecke_field_d = 0;
  Integer expected_dim;
  std::vector<Eigenvalue> eigenvalues;

  std::vector<Integer> bad_primes() const;  // primes dividing the level
  const QuadElement& eigenvalue(const Integer& p) const;

  // Throws InputError naming the field: level and expected_dim positive,
  // d squarefree and > 1, each p prime, of good reduction, listed once,
  // a_p in Q(sqrt d) and inside the Weil bound. expected_dim is not
  // compared with the field degree here.
  void validate() const;
};

// Both real embeddings of a satisfy |e| <= 2 sqrt(p), decided exactly.
bool satisfies_weil_bound(const QuadElement& a, const Integer& p);

/// Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0 with c0 = p^2 and
/// c1 = p c3. DomainError otherwise.
class WeilQuartic {
 public:
  WeilQuartic(Integer p, IntPoly poly);

  const Integer& p() const noexcept { return p_; }
  const IntPoly& poly() const noexcept { return poly_; }
  Integer c(std::size_t i) const { return poly_.coeff(i); }

  friend bool operator==(const WeilQuartic&, const WeilQuartic&) = default;

 private:
  Integer p_;
  IntPoly poly_;
};

/// N(x^2 - a x + p) = (x^2 - a x + p)(x^2 - conj(a) x + p). InvalidEigenvalue
/// when a is not an algebraic integer or breaks the Weil bound; DomainError
/// when p is not prime or a lies in an imaginary field.
WeilQuartic frobenius_charpoly(const QuadElement& a, const Integer& p);

bool is_ordinary(const WeilQuartic& P);  // gcd(c2, p) = 1

// The roots y of y^2 + c3 y + (c2 - 2p) (y = x + p/x) are real and lie in
// [-2 sqrt p, 2 sqrt p].
bool roots_on_weil_circle(const WeilQuartic& P);

inline constexpr unsigned kDefaultStabilityBound = 12;

struct StabilityResult {
  bool stable = false;
  unsigned bound = 0;
  std::optional<unsigned> unstable_at;  // first k with deg minpoly(pi^k) < 4
  std::vector<IntPoly> minimal_polys;   // minpoly of pi^k for k = 2..last tested

  std::string to_string() const;  // "stable" or "unstable-at-<k>"
};

/// Degree of Q(pi^k) for k = 2..bound via the squarefree part of
/// Res_y(P(y), x - y^k). PreconditionError when P is reducible.
StabilityResult endomorphism_stability(const WeilQuartic& P, unsigned bound = kDefaultStabilityBound);

enum class FieldComparison { distinct, inconclusive };

struct DistinctnessCertificate {
  FieldComparison verdict = FieldComparison::inconclusive;
  IntPoly first, second;
  Rational disc_first, disc_second, ratio;
};

/// "distinct" when disc(P1)/disc(P2) is not a rational square, otherwise
/// "inconclusive". PreconditionError on reducible input.
DistinctnessCertificate distinct_fields_certificate(const WeilQuartic& P1, const WeilQuartic& P2);

/// Facts about one reduction, as consumed by deduce_endomorphism_ring.
/// Unset fields are missing certificates.
struct ReductionCertificate {
  Integer p;
  IntPoly charpoly;
  std::optional<bool> weil_shape;
  std::optional<bool> irreducible;
  std::optional<bool> ordinary;
  std::optional<StabilityResult> stability;
  // Q(pi) contains Q(sqrt d): disc(y^2 + c3 y + c2 - 2p) / d is a square.
  std::optional<std::int64_t> real_subfield_d;
};

ReductionCertificate certify_reduction(const WeilQuartic& P, unsigned bound = kDefaultStabilityBound);

struct EndomorphismDeduction {
  std::int64_t d = 0;
  std::vector<std::string> steps;
  std::vector<std::string> assumed;
  std::string conclusion;  // "End = Z[sqrt(10)]"
};

/// End of the abelian surface with Hecke field Q(sqrt d), from two good
/// ordinary reductions with stable, distinct quartic endomorphism algebras.
/// DeductionRefused naming the first missing or negative certificate.
EndomorphismDeduction deduce_endomorphism_ring(std::int64_t d, const ReductionCertificate& first,
                                               const ReductionCertificate& second,
                                               const DistinctnessCertificate& distinct);

}  // namespace kzero
