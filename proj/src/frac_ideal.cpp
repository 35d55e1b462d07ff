#include "kzero/frac_ideal.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include "kzero/errors.hpp"
#include "quadratic_irrational.hpp"

namespace kzero {
namespace {

// Z (x1, 0) + Z (x2, y): Hermite normal form of a rank-2 sublattice of Z^2.
struct Hermite {
  Integer x1 = 0, x2 = 0, y = 0;
};

Hermite hermite(const std::vector<std::pair<Integer, Integer>>& vectors) {
  Hermite h;
  Integer px = 0, py = 0;  // pivot row
  for (const auto& [x, y] : vectors) {
    if (y == 0) {
      h.x1 = gcd(h.x1, x);
      continue;
    }
    if (py == 0) {
      px = x;
      py = y;
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
    // unimodular: (s, t; y/g, -py/g)
    Integer nx = s * px + t * x;
    Integer rest = (y / g) * px - (py / g) * x;
    h.x1 = gcd(h.x1, rest);
    px = nx;
    py = g;
  }
  if (py < 0) {
    px = -px;
    py = -py;
  }
  h.y = py;
  if (h.x1 != 0) h.x2 = mod_floor(px, h.x1);
  return h;
}

// Absolute norm of b + w.
Integer norm_b_plus_omega(const QuadOrder& order, const Integer& b) { return order.norm_form(b, 1); }

struct RealWalkState {
  Integer P, Q;
};

// Continued-fraction walk from the primitive ideal [a, b + w] = Z a + Z (B + sqrt D)/2.
// Stops when a (P, Q) state repeats; cycle_start indexes the first periodic state.
struct RealWalk {
  std::vector<RealWalkState> states;
  std::size_t cycle_start = 0;
};

constexpr std::size_t kMaxWalkSteps = 50'000'000;

RealWalk walk_real(const QuadOrder& order, const Integer& a, const Integer& b) {
  const Integer& D = order.discriminant();
  QuadraticIrrational theta(D, 2 * b + order.omega_trace(), 2 * a);
  RealWalk w;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  for (;;) {
    std::pair<Integer, Integer> key{theta.P(), theta.Q()};
    if (auto it = seen.find(key); it != seen.end()) {
      w.cycle_start = it->second;
      return w;
    }
    seen.emplace(key, w.states.size());
    w.states.push_back({theta.P(), theta.Q()});
    if (w.states.size() > kMaxWalkSteps) throw ResourceError("reduction walk exceeded step bound");
    theta.advance(theta.floor());
  }
}

FracIdeal ideal_of_state(const QuadOrder& order, const RealWalkState& s) {
  Integer a = abs(s.Q) / 2;
  return FracIdeal(order, a, (s.P - order.omega_trace()) / 2);
}

// sqrt(D) as an element of Q(sqrt d)
QuadElement root_disc(const QuadOrder& order) {
  return QuadElement(order.d(), 0, order.omega_trace() == 1 ? 1 : 2);
}

// gamma_k with J_k = gamma_k * [a, b + w], replaying the walk for k steps.
QuadElement walk_multiplier(const QuadOrder& order, const Integer& a, const Integer& b, std::size_t k) {
  QuadraticIrrational theta(order.discriminant(), 2 * b + order.omega_trace(), 2 * a);
  QuadElement gamma(order.d(), 1);
  const QuadElement root = root_disc(order);
  for (std::size_t i = 0; i < k; ++i) {
    Integer q_old = theta.Q();
    theta.advance(theta.floor());
    gamma *= (QuadElement(order.d(), Rational(theta.P())) + root).scaled(make_rational(1, q_old));
  }
  return gamma;
}

struct ReducedForm {
  Integer A, B, C;
  QuadElement e1, e2;  // oriented basis of the ideal, N(x e1 + y e2) = N(I) (A x^2 + B x y + C y^2)
};

ReducedForm reduce_imaginary(const QuadOrder& order, const Integer& a, const Integer& b) {
  const Integer& D = order.discriminant();
  ReducedForm f{a, 2 * b + order.omega_trace(), 0, order.element(Rational(a), 0), order.element(Rational(b), 1)};
  f.C = (f.B * f.B - D) / (4 * f.A);
  auto swap_basis = [&f] {
    std::swap(f.A, f.C);
    f.B = -f.B;
    QuadElement e1 = f.e2;
    f.e2 = -f.e1;
    f.e1 = std::move(e1);
  };
  for (;;) {
    Integer k = floor_div(f.A - f.B, 2 * f.A);
    if (k != 0) {
      f.C = f.A * k * k + f.B * k + f.C;
      f.B += 2 * k * f.A;
      f.e2 += f.e1.scaled(Rational(k));
    }
    if (f.A > f.C) {
      swap_basis();
      continue;
    }
    if (f.A == f.C && f.B < 0) swap_basis();
    return f;
  }
}

}  // namespace

FracIdeal::FracIdeal(const QuadOrder& order, const Integer& a, const Integer& b, const Integer& q)
    : order_(order), scale_(0), a_(a), b_(0) {
  if (a <= 0) throw DomainError("ideal normal form needs a > 0");
  if (q <= 0) throw DomainError("ideal normal form needs q > 0");
  b_ = mod_floor(b, a);
  if (!mpz_divisible_p(norm_b_plus_omega(order, b_).get_mpz_t(), a_.get_mpz_t()))
    throw DomainError("Z" + a.get_str() + " + Z(" + b.get_str() + " + w) is not an ideal of " + order.name() +
                      ": a does not divide N(b + w)");
  scale_ = make_rational(1, q);
}

FracIdeal FracIdeal::from_generators(const QuadOrder& order, std::span<const QuadElement> gens) {
  std::vector<std::pair<Rational, Rational>> coords;
  const QuadElement w = order.omega();
  Integer den = 1;
  for (const auto& g : gens) {
    for (const auto& z : {g, g * w}) {
      auto c = order.coords(z);
      den = lcm(den, lcm(c.first.get_den(), c.second.get_den()));
      coords.push_back(std::move(c));
    }
  }
  std::vector<std::pair<Integer, Integer>> lattice;
  for (const auto& [x, y] : coords) {
    Rational sx = x * den, sy = y * den;
    lattice.emplace_back(sx.get_num(), sy.get_num());
  }
  Hermite h = hermite(lattice);
  if (h.y == 0 || h.x1 == 0) throw DomainError("the zero ideal has no normal form");
  if (h.x1 % h.y != 0 || h.x2 % h.y != 0) throw std::logic_error("generated lattice is not an O-module");
  Integer a = h.x1 / h.y;
  Integer b = mod_floor(h.x2 / h.y, a);
  if (!mpz_divisible_p(norm_b_plus_omega(order, b).get_mpz_t(), a.get_mpz_t()))
    throw std::logic_error("generated lattice is not an O-module");
  return FracIdeal(Normalized{}, order, make_rational(h.y, den), std::move(a), std::move(b));
}

FracIdeal FracIdeal::principal(const QuadOrder& order, const QuadElement& alpha) {
  return from_generators(order, std::span<const QuadElement>(&alpha, 1));
}

void FracIdeal::require_same_order(const FracIdeal& o) const {
  if (!(order_ == o.order_))
    throw ParameterMismatch("ideals of " + order_.name() + " and " + o.order_.name());
}

bool FracIdeal::is_integral() const { return scale_.get_den() == 1; }

FracIdeal FracIdeal::primitive_part() const { return FracIdeal(Normalized{}, order_, 1, a_, b_); }

std::array<QuadElement, 2> FracIdeal::basis() const {
  return {order_.element(Rational(a_), 0).scaled(scale_), order_.element(Rational(b_), 1).scaled(scale_)};
}

bool FracIdeal::contains(const QuadElement& z) const {
  auto [x, y] = order_.coords(z.scaled(1 / scale_));
  if (x.get_den() != 1 || y.get_den() != 1) return false;
  Integer r = x.get_num() - y.get_num() * b_;
  return mpz_divisible_p(r.get_mpz_t(), a_.get_mpz_t()) != 0;
}

FracIdeal FracIdeal::conj() const {
  return FracIdeal(Normalized{}, order_, scale_, a_, mod_floor(-b_ - order_.omega_trace(), a_));
}

FracIdeal FracIdeal::inverse() const {
  FracIdeal c = conj();
  c.scale_ = 1 / (scale_ * a_);
  return c;
}

FracIdeal FracIdeal::operator*(const FracIdeal& o) const {
  require_same_order(o);
  auto [e1, e2] = primitive_part().basis();
  auto [f1, f2] = o.primitive_part().basis();
  const std::array<QuadElement, 4> gens{e1 * f1, e1 * f2, e2 * f1, e2 * f2};
  FracIdeal prod = from_generators(order_, gens);
  prod.scale_ *= scale_ * o.scale_;
  return prod;
}

FracIdeal FracIdeal::operator*(const QuadElement& alpha) const {
  if (alpha.is_zero()) throw DomainError("scaling an ideal by zero");
  auto [e1, e2] = basis();
  const std::array<QuadElement, 2> gens{e1 * alpha, e2 * alpha};
  return from_generators(order_, gens);
}

std::string FracIdeal::to_string() const {
  std::string body =
      a_ == 1 ? "(1)" : "(" + a_.get_str() + ", " + order_.element(Rational(b_), 1).to_string() + ")";
  if (scale_ == 1) return body;
  return scale_.get_str() + "*" + body;
}

std::ostream& operator<<(std::ostream& os, const FracIdeal& I) { return os << I.to_string(); }

ReductionWalk reduction_walk(const FracIdeal& I) {
  const QuadOrder& order = I.order();
  if (!order.is_real()) throw DomainError("reduction walk is defined for real quadratic orders");
  RealWalk w = walk_real(order, I.a(), I.b());
  ReductionWalk out;
  for (std::size_t i = 0; i < w.states.size(); ++i)
    (i < w.cycle_start ? out.preperiod : out.cycle).push_back(ideal_of_state(order, w.states[i]));
  return out;
}

PrincipalityResult is_principal(const FracIdeal& I) {
  const QuadOrder& order = I.order();
  std::optional<QuadElement> prim_gen;
  if (order.is_real()) {
    RealWalk w = walk_real(order, I.a(), I.b());
    for (std::size_t k = 0; k < w.states.size(); ++k) {
      if (abs(w.states[k].Q) == 2) {
        prim_gen = walk_multiplier(order, I.a(), I.b(), k).inverse();
        break;
      }
    }
  } else {
    ReducedForm f = reduce_imaginary(order, I.a(), I.b());
    if (f.A == 1) prim_gen = f.e1;
  }
  if (!prim_gen) return {false, std::nullopt};
  QuadElement gen = prim_gen->scaled(I.scale());
  if (!(FracIdeal::principal(order, gen) == I)) throw std::logic_error("principal generator failed verification");
  return {true, gen};
}

IdealClass class_of(const FracIdeal& I) {
  const QuadOrder& order = I.order();
  if (order.is_real()) {
    RealWalk w = walk_real(order, I.a(), I.b());
    std::optional<FracIdeal> best;
    for (std::size_t i = w.cycle_start; i < w.states.size(); ++i) {
      FracIdeal J = ideal_of_state(order, w.states[i]);
      if (!best || J.a() < best->a() || (J.a() == best->a() && J.b() < best->b())) best = std::move(J);
    }
    return IdealClass(std::move(*best));
  }
  ReducedForm f = reduce_imaginary(order, I.a(), I.b());
  return IdealClass(FracIdeal(order, f.A, (f.B - order.omega_trace()) / 2));
}

IdealClass trivial_class(const QuadOrder& order) { return class_of(FracIdeal::unit(order)); }

IdealClass IdealClass::operator*(const IdealClass& o) const { return class_of(rep_ * o.rep_); }

IdealClass IdealClass::inverse() const { return class_of(rep_.conj()); }

IdealClass IdealClass::pow(long n) const {
  IdealClass base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  IdealClass acc = trivial_class(order());
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::strong_ordering operator<=>(const IdealClass& x, const IdealClass& y) {
  if (auto c = x.order().d() <=> y.order().d(); c != 0) return c;
  if (int c = cmp(x.rep_.a(), y.rep_.a()); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(x.rep_.b(), y.rep_.b());
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string IdealClass::to_string() const { return "[" + rep_.to_string() + "]"; }

std::ostream& operator<<(std::ostream& os, const IdealClass& c) { return os << c.to_string(); }

}  // namespace kzero
