#include "kzero/int_poly.hpp"

#include <algorithm>
#include <ostream>

#include "kzero/errors.hpp"

namespace kzero {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1, Integer(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return exact_quotient(*this, g);
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reflected() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Integer IntPoly::operator()(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
  acc.canonicalize();
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.to_string(); }

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("pseudo-division by the zero polynomial");
  IntPoly q, r = f;
  const Integer& lc = g.leading();
  int dg = g.degree();
  int steps = std::max(f.degree() - dg + 1, 0);
  while (!r.is_zero() && r.degree() >= dg) {
    auto shift = static_cast<std::size_t>(r.degree() - dg);
    IntPoly term = IntPoly::monomial(r.leading(), shift);
    q = q * lc + term;
    r = r * lc - term * g;
    --steps;
  }
  // pad so that the multiplier is exactly lc^(deg f - deg g + 1)
  for (; steps > 0; --steps) {
    q *= lc;
    r *= lc;
  }
  return {q, r};
}

IntPoly exact_quotient(const IntPoly& f, const Integer& k) {
  if (k == 0) throw DomainError("division of a polynomial by zero");
  std::vector<Integer> out(f.coefficients().begin(), f.coefficients().end());
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
      throw DomainError("inexact polynomial division by " + k.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly exact_quotient(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw DomainError("inexact polynomial division");
  std::vector<Integer> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), Integer(0));
  auto gc = g.coefficients();
  const Integer& lc = g.leading();
  auto dg = static_cast<std::size_t>(g.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = rem[k + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw DomainError("inexact polynomial division");
    Integer t = top / lc;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= t * gc[j];
    q[k] = t;
  }
  for (const auto& c : rem)
    if (c != 0) throw DomainError("inexact polynomial division");
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  IntPoly a = f.primitive_part(), b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a;
  while (!b.is_zero()) {
    IntPoly r = pseudo_divmod(a, b).second;
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return IntPoly::constant(1);
  IntPoly g = gcd(f, f.derivative());
  return exact_quotient(f.primitive_part(), g);
}

}  // namespace kzero
