#include "kzero/weil.hpp"

#include <algorithm>
#include <set>

#include "kzero/errors.hpp"
#include "kzero/quad_order.hpp"
#include "kzero/quartic.hpp"
#include "kzero/resultant.hpp"

namespace kzero {
namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// squarefree kernel of n > 0
Integer squarefree_kernel(const Integer& n) {
  Integer k = 1, m = n;
  for (const Integer& q : prime_factors(n)) {
    unsigned v = 0;
    while (m % q == 0) {
      m /= q;
      ++v;
    }
    if (v % 2) k *= q;
  }
  return k;
}

void require_irreducible(const WeilQuartic& P, const char* who) {
  if (!is_irreducible_monic(P.poly()))
    throw PreconditionError(std::string(who) + ": " + P.poly().to_string() + " is reducible");
}

std::string prime_label(const Integer& p) { return "p=" + p.get_str(); }

void refuse_unless(bool ok, const std::string& gap) {
  if (!ok) throw DeductionRefused("cannot deduce End: " + gap);
}

void check_reduction(const ReductionCertificate& c, std::int64_t d) {
  const std::string at = prime_label(c.p);
  refuse_unless(c.weil_shape.has_value(), at + " Weil shape certificate missing");
  refuse_unless(*c.weil_shape, at + " charpoly is not a Weil quartic");
  refuse_unless(c.irreducible.has_value(), at + " irreducibility certificate missing");
  refuse_unless(*c.irreducible, at + " charpoly is reducible");
  refuse_unless(c.ordinary.has_value(), at + " ordinarity certificate missing");
  refuse_unless(*c.ordinary, at + " reduction is not ordinary");
  refuse_unless(c.stability.has_value(), at + " stability certificate missing");
  refuse_unless(c.stability->stable, at + " endomorphism algebra is " + c.stability->to_string());
  refuse_unless(c.real_subfield_d.has_value(), at + " real quadratic subfield certificate missing");
  refuse_unless(*c.real_subfield_d == d, at + " Q(pi) does not contain Q(sqrt " + std::to_string(d) + ")");
}

}  // namespace

std::vector<Integer> NewformDatum::bad_primes() const { return prime_factors(level); }

const QuadElement& NewformDatum::eigenvalue(const Integer& p) const {
  for (const auto& e : eigenvalues)
    if (e.p == p) return e.a;
  throw InputError("eigenvalues", "no eigenvalue for p = " + p.get_str());
}

void NewformDatum::validate() const {
  if (level <= 0) throw InputError("level", "must be positive");
  if (expected_dim <= 0) throw InputError("expected_dim", "must be positive");
  if (hecke_field_d <= 1 || !is_squarefree(hecke_field_d))
    throw InputError("hecke_field_d", "must be a squarefree integer > 1");
  if (eigenvalues.empty()) throw InputError("eigenvalues", "empty");
  std::set<Integer> seen;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const auto& [p, a] = eigenvalues[i];
    const std::string where = "eigenvalues[" + std::to_string(i) + "]";
    if (p < 2 || !is_prime(p)) throw InputError(where + ".p", p.get_str() + " is not prime");
    if (level % p == 0) throw InputError(where + ".p", p.get_str() + " divides the level");
    if (!seen.insert(p).second) throw InputError(where + ".p", "duplicate prime " + p.get_str());
    if (a.d() != hecke_field_d) throw InputError(where + ".a", "not in Q(sqrt " + std::to_string(hecke_field_d) + ")");
    if (!satisfies_weil_bound(a, p)) throw InputError(where + ".a", a.to_string() + " exceeds 2 sqrt(" + p.get_str() + ")");
  }
}

bool satisfies_weil_bound(const QuadElement& a, const Integer& p) {
  if (a.d() < 0) throw DomainError("Weil bound: " + a.to_string() + " is not real");
  const Rational sq = a.a() * a.a() + Rational(a.d()) * a.b() * a.b();
  const Rational cross = 2 * a.a() * a.b();
  // 4p - e^2 >= 0 for e = a +- b sqrt d
  for (int s : {1, -1})
    if (sign_of(Rational(4 * p) - sq, Rational(-s * cross), Integer(a.d())) < 0) return false;
  return true;
}

WeilQuartic::WeilQuartic(Integer p, IntPoly poly) : p_(std::move(p)), poly_(std::move(poly)) {
  if (p_ < 2 || !is_prime(p_)) throw DomainError("WeilQuartic: " + p_.get_str() + " is not prime");
  if (poly_.degree() != 4 || !poly_.is_monic())
    throw DomainError("WeilQuartic: " + poly_.to_string() + " is not a monic quartic");
  if (poly_.coeff(0) != p_ * p_ || poly_.coeff(1) != p_ * poly_.coeff(3))
    throw DomainError("WeilQuartic: " + poly_.to_string() + " lacks the shape c0 = p^2, c1 = p c3");
}

WeilQuartic frobenius_charpoly(const QuadElement& a, const Integer& p) {
  if (p < 2 || !is_prime(p)) throw DomainError("frobenius_charpoly: " + p.get_str() + " is not prime");
  if (a.d() < 0) throw DomainError("frobenius_charpoly: " + a.to_string() + " lies in an imaginary field");
  const Rational tr = a.trace(), nm = a.norm();
  if (!is_integer(tr) || !is_integer(nm))
    throw InvalidEigenvalue("frobenius_charpoly: " + a.to_string() + " is not an algebraic integer");
  if (!satisfies_weil_bound(a, p))
    throw InvalidEigenvalue("frobenius_charpoly: " + a.to_string() + " violates |a_p| <= 2 sqrt(" + p.get_str() + ")");
  const Integer t = tr.get_num(), n = nm.get_num();
  return WeilQuartic(p, IntPoly{Integer(p * p), Integer(-p * t), Integer(n + 2 * p), Integer(-t), 1});
}

bool is_ordinary(const WeilQuartic& P) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), P.c(2).get_mpz_t(), P.p().get_mpz_t());
  return g == 1;
}

bool roots_on_weil_circle(const WeilQuartic& P) {
  const Integer c3 = P.c(3), e = P.c(2) - 2 * P.p();
  // g(y) = y^2 + c3 y + e, L = 2 sqrt p
  if (c3 * c3 - 4 * e < 0) return false;
  if (c3 * c3 > 16 * P.p()) return false;  // vertex -c3/2 outside [-L, L]
  // g(+-L) = 4p + e +- 2 c3 sqrt p >= 0
  for (int s : {1, -1})
    if (sign_of(Rational(4 * P.p() + e), Rational(2 * s * c3), P.p()) < 0) return false;
  return true;
}

std::string StabilityResult::to_string() const {
  return stable ? "stable" : "unstable-at-" + std::to_string(unstable_at.value_or(0));
}

StabilityResult endomorphism_stability(const WeilQuartic& P, unsigned bound) {
  if (bound == 0) throw DomainError("endomorphism_stability: bound must be positive");
  require_irreducible(P, "endomorphism_stability");
  StabilityResult r;
  r.bound = bound;
  r.stable = true;
  for (unsigned k = 2; k <= bound; ++k) {
    IntPoly m = squarefree_part(power_resultant(P.poly(), k));
    r.minimal_polys.push_back(m);
    if (m.degree() < 4) {
      r.stable = false;
      r.unstable_at = k;
      break;
    }
  }
  return r;
}

DistinctnessCertificate distinct_fields_certificate(const WeilQuartic& P1, const WeilQuartic& P2) {
  require_irreducible(P1, "distinct_fields_certificate");
  require_irreducible(P2, "distinct_fields_certificate");
  DistinctnessCertificate c;
  c.first = P1.poly();
  c.second = P2.poly();
  c.disc_first = discriminant(P1.poly());
  c.disc_second = discriminant(P2.poly());
  c.ratio = c.disc_first / c.disc_second;
  c.verdict = is_rational_square(c.ratio) ? FieldComparison::inconclusive : FieldComparison::distinct;
  return c;
}

ReductionCertificate certify_reduction(const WeilQuartic& P, unsigned bound) {
  ReductionCertificate c;
  c.p = P.p();
  c.charpoly = P.poly();
  c.weil_shape = roots_on_weil_circle(P);
  c.irreducible = is_irreducible_monic(P.poly());
  c.ordinary = is_ordinary(P);
  if (*c.irreducible) c.stability = endomorphism_stability(P, bound);
  const Integer disc = P.c(3) * P.c(3) - 4 * (P.c(2) - 2 * P.p());
  if (disc > 0 && !is_perfect_square(disc)) c.real_subfield_d = squarefree_kernel(disc).get_si();
  return c;
}

EndomorphismDeduction deduce_endomorphism_ring(std::int64_t d, const ReductionCertificate& first,
                                               const ReductionCertificate& second,
                                               const DistinctnessCertificate& distinct) {
  refuse_unless(d > 1 && is_squarefree(d), "Z[sqrt " + std::to_string(d) + "] does not define a real quadratic field");
  check_reduction(first, d);
  check_reduction(second, d);
  refuse_unless(first.p != second.p, "both certificates come from the same prime");
  const bool same_pair = (distinct.first == first.charpoly && distinct.second == second.charpoly) ||
                         (distinct.first == second.charpoly && distinct.second == first.charpoly);
  refuse_unless(same_pair, "distinctness certificate concerns other polynomials");
  refuse_unless(distinct.verdict == FieldComparison::distinct,
                "distinctness inconclusive (discriminant ratio " + to_string(distinct.ratio) + " is a square)");

  const QuadOrder O = maximal_order(d);
  const std::string field = "Q(sqrt " + std::to_string(d) + ")";
  EndomorphismDeduction r;
  r.d = d;
  for (const auto* c : {&first, &second}) {
    const std::string at = prime_label(c->p);
    r.steps.push_back(at + ": " + c->charpoly.to_string() + " is an irreducible ordinary Weil quartic");
    r.steps.push_back(at + ": Q(pi^k) = Q(pi) for k = 2.." + std::to_string(c->stability->bound) +
                      ", so End of the reduction tensor Q is the quartic field Q(pi)");
    r.steps.push_back(at + ": Q(pi) contains " + field);
  }
  r.steps.push_back("disc ratio " + to_string(distinct.ratio) + " is not a rational square, so the quartic fields differ");
  r.steps.push_back("End(A) tensor Q embeds in both quartic fields, so its dimension is at most 2");
  r.steps.push_back("End(A) contains " + O.name() + ", so End(A) tensor Q = " + field);
  r.steps.push_back(O.name() + " is the maximal order of " + field + ", so End(A) equals it");
  r.assumed = {"End(A) injects into the endomorphism ring of each reduction",
               "the Hecke algebra gives " + O.name() + " inside End(A)"};
  r.conclusion = "End = " + O.name();
  return r;
}

}  // namespace kzero
