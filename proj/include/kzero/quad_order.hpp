#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "kzero/quad_element.hpp"

namespace kzero {

/// The maximal order Z[w] of Q(sqrt d), with w = (1 + sqrt d)/2 when
/// d = 1 mod 4 and w = sqrt d otherwise.
class QuadOrder {
 public:
  std::int64_t d() const noexcept { return d_; }
  const Integer& discriminant() const noexcept { return disc_; }
  bool is_real() const noexcept { return d_ > 0; }

  QuadElement omega() const;
  // w satisfies w^2 - t w + n = 0
  int omega_trace() const noexcept { return t_; }
  const Integer& omega_norm() const noexcept { return n_; }

  // x + y w
  QuadElement element(const Rational& x, const Rational& y) const;
  // Coordinates (x, y) of an element of Q(sqrt d) in the basis {1, w}.
  std::pair<Rational, Rational> coords(const QuadElement& z) const;
  bool contains(const QuadElement& z) const;  // z is an algebraic integer
  // N(x + y w) for integers x, y
  Integer norm_form(const Integer& x, const Integer& y) const;

  std::string name() const;

  friend bool operator==(const QuadOrder& a, const QuadOrder& b) { return a.d_ == b.d_; }

 private:
  friend QuadOrder maximal_order(std::int64_t d);
  explicit QuadOrder(std::int64_t d);
  void require_field(const QuadElement& z) const;

  std::int64_t d_;
  Integer disc_;
  int t_;
  Integer n_;
};

// DomainError unless d is squarefree and not 0 or 1.
QuadOrder maximal_order(std::int64_t d);

/// Smallest unit u > 1 of a real quadratic order, read off the first
/// convergent p/q of the continued fraction of w with N(p - q w) = +-1
/// (then u = p - q * conj(w)). DomainError for imaginary orders.
QuadElement fundamental_unit(const QuadOrder& order);

}  // namespace kzero
