#include "kzero/quad_order.hpp"

#include "kzero/errors.hpp"
#include "quadratic_irrational.hpp"

namespace kzero {

QuadOrder::QuadOrder(std::int64_t d) : d_(d) {
  const long dl = static_cast<long>(d);
  if (mod_floor(Integer(dl), 4) == 1) {
    disc_ = dl;
    t_ = 1;
    n_ = (1 - Integer(dl)) / 4;
  } else {
    disc_ = 4 * Integer(dl);
    t_ = 0;
    n_ = -Integer(dl);
  }
}

QuadOrder maximal_order(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw DomainError("d=" + std::to_string(d) + " is not a squarefree integer other than 0, 1");
  return QuadOrder(d);
}

QuadElement QuadOrder::omega() const { return element(0, 1); }

QuadElement QuadOrder::element(const Rational& x, const Rational& y) const {
  if (t_ == 1) return QuadElement(d_, x + y / 2, y / 2);
  return QuadElement(d_, x, y);
}

void QuadOrder::require_field(const QuadElement& z) const {
  if (z.d() != d_)
    throw ParameterMismatch("element of Q(sqrt " + std::to_string(z.d()) + ") used with " + name());
}

std::pair<Rational, Rational> QuadOrder::coords(const QuadElement& z) const {
  require_field(z);
  if (t_ == 1) return {Rational(z.a() - z.b()), Rational(2 * z.b())};
  return {z.a(), z.b()};
}

bool QuadOrder::contains(const QuadElement& z) const {
  auto [x, y] = coords(z);
  return x.get_den() == 1 && y.get_den() == 1;
}

Integer QuadOrder::norm_form(const Integer& x, const Integer& y) const {
  return x * x + t_ * x * y + n_ * y * y;
}

std::string QuadOrder::name() const {
  std::string r = "sqrt(" + std::to_string(d_) + ")";
  return t_ == 1 ? "Z[(1+" + r + ")/2]" : "Z[" + r + "]";
}

QuadElement fundamental_unit(const QuadOrder& order) {
  if (!order.is_real()) throw DomainError("fundamental unit of an imaginary quadratic order");
  // w = (t + sqrt D)/2
  QuadraticIrrational theta(order.discriminant(), order.omega_trace(), 2);
  Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (;;) {
    Integer a = theta.floor();
    Integer p = a * p_prev + p_prev2, q = a * q_prev + q_prev2;
    Integer n = order.norm_form(p, -q);
    if (n == 1 || n == -1) return order.element(p - q * order.omega_trace(), q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    theta.advance(a);
  }
}

}  // namespace kzero
