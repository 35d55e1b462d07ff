#include "kzero/quartic.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "kzero/errors.hpp"

namespace kzero {
namespace {

bool factor_less(const IntPoly& f, const IntPoly& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  auto a = f.coefficients(), b = g.coefficients();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// (x^2 + a x + b)(x^2 + c x + e) = f for a monic quartic f without rational roots.
std::optional<std::pair<IntPoly, IntPoly>> quadratic_split(const IntPoly& f) {
  const Integer c0 = f.coeff(0), c1 = f.coeff(1), c2 = f.coeff(2), c3 = f.coeff(3);
  for (const Integer& pos : positive_divisors(c0)) {
    for (const Integer& b : {pos, Integer(-pos)}) {
      const Integer e = c0 / b;
      Integer a, c;
      if (e != b) {
        Integer num = c1 - c3 * b, den = e - b;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
        a = num / den;
        c = c3 - a;
        if (b + e + a * c != c2) continue;
      } else {
        // a + c = c3, a c = c2 - 2b; a e + b c = b (a + c) forces c1 = b c3
        if (c1 != b * c3) continue;
        Integer disc = c3 * c3 - 4 * (c2 - 2 * b);
        if (!is_perfect_square(disc)) continue;
        Integer s = isqrt(disc);
        if ((c3 + s) % 2 != 0) continue;
        a = (c3 + s) / 2;
        c = c3 - a;
      }
      return std::pair{IntPoly{b, a, 1}, IntPoly{e, c, 1}};
    }
  }
  return std::nullopt;
}

void factor_monic(const IntPoly& f, std::vector<IntPoly>& out) {
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f);
    return;
  }
  auto roots = integer_roots(f);
  if (!roots.empty()) {
    IntPoly lin{Integer(-roots.front()), 1};
    out.push_back(lin);
    factor_monic(exact_quotient(f, lin), out);
    return;
  }
  if (f.degree() == 4) {
    if (auto split = quadratic_split(f)) {
      out.push_back(split->first);
      out.push_back(split->second);
      return;
    }
  }
  out.push_back(f);
}

void require_monic_small(const IntPoly& f) {
  if (!f.is_monic()) throw DomainError("expected a monic polynomial, got " + f.to_string());
}

}  // namespace

IntPoly QuarticFactorization::product() const {
  IntPoly p = IntPoly::constant(1);
  for (const auto& g : factors) p *= g;
  return p;
}

std::vector<Integer> integer_roots(const IntPoly& f) {
  require_monic_small(f);
  // f = x^k g with g(0) != 0
  std::size_t k = 0;
  while (f.coeff(k) == 0) ++k;
  IntPoly g(std::vector<Integer>(f.coefficients().begin() + static_cast<long>(k), f.coefficients().end()));
  std::vector<Integer> roots;
  if (k > 0) roots.push_back(0);
  if (g.degree() >= 1) {
    for (const Integer& pos : positive_divisors(g.coeff(0))) {
      if (g(pos) == 0) roots.push_back(pos);
      if (g(Integer(-pos)) == 0) roots.push_back(-pos);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QuarticFactorization factor_quartic(const IntPoly& f) {
  if (f.degree() != 4) throw DomainError("factor_quartic needs degree 4, got " + f.to_string());
  require_monic_small(f);
  QuarticFactorization out{f, {}};
  factor_monic(f, out.factors);
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

bool is_irreducible_monic(const IntPoly& f) {
  require_monic_small(f);
  if (f.degree() > 4) throw DomainError("irreducibility test limited to degree <= 4");
  if (f.degree() < 1) return false;
  std::vector<IntPoly> parts;
  factor_monic(f, parts);
  return parts.size() == 1;
}

}  // namespace kzero
