#include "kzero/quad_element.hpp"

#include <ostream>

#include "kzero/errors.hpp"

namespace kzero {

QuadElement::QuadElement(std::int64_t d, Rational a, Rational b)
    : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw DomainError("field parameter d=" + std::to_string(d) + " is not a squarefree integer other than 0, 1");
  a_.canonicalize();
  b_.canonicalize();
}

void QuadElement::require_same_field(const QuadElement& o) const {
  if (d_ != o.d_)
    throw ParameterMismatch("quadratic elements over d=" + std::to_string(d_) + " and d=" +
                            std::to_string(o.d_));
}

QuadElement QuadElement::conj() const { return QuadElement(d_, a_, -b_, Unchecked{}); }

Rational QuadElement::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Rational QuadElement::trace() const { return 2 * a_; }

QuadElement QuadElement::inverse() const {
  Rational n = norm();
  if (n == 0) throw DomainError("inverse of zero");
  return QuadElement(d_, a_ / n, -b_ / n, Unchecked{});
}

int sign_of(const Rational& r, const Rational& s, const Integer& m) {
  int sr = sgn(r), ss = sgn(s);
  if (sr == 0) return ss;
  if (ss == 0 || sr == ss) return sr;
  // opposite signs: compare r^2 with s^2 m
  Rational lhs = r * r, rhs = s * s * m;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sr : ss;
}

int QuadElement::sign() const {
  if (d_ < 0) throw DomainError("sign of an element of an imaginary quadratic field");
  return sign_of(a_, b_, Integer(static_cast<long>(d_)));
}

QuadElement& QuadElement::operator+=(const QuadElement& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& o) {
  require_same_field(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElement& QuadElement::operator/=(const QuadElement& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

std::string QuadElement::to_string() const {
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (b_ == 0) return a_.get_str();
  std::string coeff;
  if (b_ == 1)
    coeff = root;
  else if (b_ == -1)
    coeff = "-" + root;
  else
    coeff = b_.get_str() + "*" + root;
  if (a_ == 0) return coeff;
  if (b_ < 0) return a_.get_str() + " - " + coeff.substr(1);
  return a_.get_str() + " + " + coeff;
}

std::ostream& operator<<(std::ostream& os, const QuadElement& x) { return os << x.to_string(); }

}  // namespace kzero
