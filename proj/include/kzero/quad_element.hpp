#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kzero/arith.hpp"

namespace kzero {

/// An element a + b*sqrt(d) of the quadratic field Q(sqrt d), with exact
/// rational coordinates. d is squarefree and not 0 or 1. Binary operations
/// on elements of different fields throw ParameterMismatch.
class QuadElement {
 public:
  QuadElement(std::int64_t d, Rational a, Rational b = 0);

  static QuadElement sqrt_d(std::int64_t d) { return QuadElement(d, 0, 1); }

  std::int64_t d() const noexcept { return d_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadElement conj() const;
  Rational norm() const;   // a^2 - d b^2
  Rational trace() const;  // 2a
  QuadElement inverse() const;

  // Sign of the real embedding with sqrt(d) > 0. Real fields only.
  int sign() const;

  QuadElement& operator+=(const QuadElement& o);
  QuadElement& operator-=(const QuadElement& o);
  QuadElement& operator*=(const QuadElement& o);
  QuadElement& operator/=(const QuadElement& o);

  friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
  friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
  friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
  friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }
  QuadElement operator-() const { return QuadElement(d_, -a_, -b_, Unchecked{}); }

  QuadElement scaled(const Rational& r) const { return QuadElement(d_, a_ * r, b_ * r, Unchecked{}); }

  friend bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadElement(std::int64_t d, Rational a, Rational b, Unchecked)
      : d_(d), a_(std::move(a)), b_(std::move(b)) {}
  void require_same_field(const QuadElement& o) const;

  std::int64_t d_;
  Rational a_;
  Rational b_;
};

inline QuadElement conj(const QuadElement& x) { return x.conj(); }
inline Rational norm(const QuadElement& x) { return x.norm(); }
inline Rational trace(const QuadElement& x) { return x.trace(); }

// Sign of r + s*sqrt(m) for m > 0 non-square, decided exactly.
int sign_of(const Rational& r, const Rational& s, const Integer& m);

std::ostream& operator<<(std::ostream& os, const QuadElement& x);

}  // namespace kzero
