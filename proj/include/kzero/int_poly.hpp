#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kzero/arith.hpp"

namespace kzero {

/// Univariate polynomial over Z. Coefficients are stored constant term
/// first with no trailing zeros; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<Integer> coeffs);

  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }
  static IntPoly monomial(const Integer& c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // Coefficient of x^i, zero past the degree.
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const;
  std::span<const Integer> coefficients() const noexcept { return c_; }

  Integer content() const;  // nonnegative; 0 for the zero polynomial
  IntPoly primitive_part() const;  // positive leading coefficient
  IntPoly derivative() const;
  IntPoly reflected() const;  // f(-x)

  Integer operator()(const Integer& t) const;
  Rational operator()(const Rational& t) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& k);

  friend IntPoly operator+(IntPoly f, const IntPoly& g) { return f += g; }
  friend IntPoly operator-(IntPoly f, const IntPoly& g) { return f -= g; }
  friend IntPoly operator*(IntPoly f, const IntPoly& g) { return f *= g; }
  friend IntPoly operator*(IntPoly f, const Integer& k) { return f *= k; }
  friend IntPoly operator*(const Integer& k, IntPoly f) { return f *= k; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Pseudo-division: lc(g)^(deg f - deg g + 1) * f = q*g + r, deg r < deg g.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g);

// f / g when g divides f exactly in Z[x]; DomainError otherwise.
IntPoly exact_quotient(const IntPoly& f, const IntPoly& g);
// f / k for an integer k dividing every coefficient.
IntPoly exact_quotient(const IntPoly& f, const Integer& k);

// Greatest common divisor, primitive with positive leading coefficient.
// gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

// Primitive squarefree part: f / gcd(f, f'), made primitive.
IntPoly squarefree_part(const IntPoly& f);

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

}  // namespace kzero
