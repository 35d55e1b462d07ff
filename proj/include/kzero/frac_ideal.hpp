#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kzero/quad_order.hpp"

namespace kzero {

/// Fractional ideal of a maximal quadratic order in normal form
///
///     scale * (Z a + Z (b + w)),   scale > 0 rational, a > 0, 0 <= b < a,
///
/// where a | N(b + w). Every nonzero fractional ideal has exactly one such
/// representation, so equality is equality of (scale, a, b). An input
/// triple (a, b, q) stands for (1/q)(Z a + Z (b + w)).
class FracIdeal {
 public:
  FracIdeal(const QuadOrder& order, const Integer& a, const Integer& b, const Integer& q = 1);

  static FracIdeal unit(const QuadOrder& order) { return FracIdeal(order, 1, 0); }
  static FracIdeal principal(const QuadOrder& order, const QuadElement& alpha);
  // O-module generated by the given elements; DomainError for the zero ideal.
  static FracIdeal from_generators(const QuadOrder& order, std::span<const QuadElement> gens);

  const QuadOrder& order() const noexcept { return order_; }
  const Rational& scale() const noexcept { return scale_; }
  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }

  Rational norm() const { return scale_ * scale_ * Rational(a_); }
  bool is_integral() const;
  bool is_primitive() const { return scale_ == 1; }
  FracIdeal primitive_part() const;

  std::array<QuadElement, 2> basis() const;
  bool contains(const QuadElement& z) const;

  FracIdeal conj() const;
  FracIdeal inverse() const;
  FracIdeal operator*(const FracIdeal& o) const;
  FracIdeal operator*(const QuadElement& alpha) const;

  friend bool operator==(const FracIdeal& x, const FracIdeal& y) {
    return x.order_ == y.order_ && x.scale_ == y.scale_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  struct Normalized {};
  FracIdeal(Normalized, const QuadOrder& order, Rational scale, Integer a, Integer b)
      : order_(order), scale_(std::move(scale)), a_(std::move(a)), b_(std::move(b)) {}
  void require_same_order(const FracIdeal& o) const;

  QuadOrder order_;
  Rational scale_;
  Integer a_;
  Integer b_;
};

std::ostream& operator<<(std::ostream& os, const FracIdeal& I);

struct PrincipalityResult {
  bool principal = false;
  std::optional<QuadElement> generator;  // set iff principal; I = (generator)
};

/// Real fields: walks the continued-fraction reduction of I until its
/// cycle of reduced ideals closes; I is principal iff the unit ideal shows
/// up. Imaginary fields: reduces the attached binary quadratic form and
/// compares with the principal form.
PrincipalityResult is_principal(const FracIdeal& I);

/// Primitive ideals met by the reduction of I, real fields only. `cycle`
/// holds the periodic part (the reduced ideals equivalent to I).
struct ReductionWalk {
  std::vector<FracIdeal> preperiod;
  std::vector<FracIdeal> cycle;
};
ReductionWalk reduction_walk(const FracIdeal& I);

/// Class of a fractional ideal modulo principal ideals, stored as a
/// canonical primitive representative: the (a, b)-least ideal of the
/// reduction cycle (real) or the reduced ideal (imaginary).
class IdealClass {
 public:
  const QuadOrder& order() const noexcept { return rep_.order(); }
  const FracIdeal& representative() const noexcept { return rep_; }
  bool is_trivial() const { return rep_.a() == 1; }

  IdealClass operator*(const IdealClass& o) const;
  IdealClass inverse() const;
  IdealClass pow(long n) const;

  friend bool operator==(const IdealClass& x, const IdealClass& y) { return x.rep_ == y.rep_; }
  // (d, a, b) lexicographic
  friend std::strong_ordering operator<=>(const IdealClass& x, const IdealClass& y);

  std::string to_string() const;

 private:
  friend IdealClass class_of(const FracIdeal& I);
  explicit IdealClass(FracIdeal rep) : rep_(std::move(rep)) {}
  FracIdeal rep_;
};

IdealClass class_of(const FracIdeal& I);
IdealClass trivial_class(const QuadOrder& order);

std::ostream& operator<<(std::ostream& os, const IdealClass& c);

}  // namespace kzero
