#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kzero/arith.hpp"
#include "kzero/errors.hpp"
#include "kzero/steinitz.hpp"

namespace kzero {

/// Element of the free commutative monoid on named generators, e.g. g^2 h.
class FreeMonoidElem {
 public:
  FreeMonoidElem() = default;  // identity
  static FreeMonoidElem generator(const std::string& name, unsigned exponent = 1);

  const std::map<std::string, unsigned>& exponents() const noexcept { return exp_; }
  unsigned degree() const;

  friend FreeMonoidElem operator*(const FreeMonoidElem& x, const FreeMonoidElem& y);
  friend bool operator==(const FreeMonoidElem&, const FreeMonoidElem&) = default;
  // lexicographic on exponent vectors over the sorted generator names
  friend std::strong_ordering operator<=>(const FreeMonoidElem& x, const FreeMonoidElem& y);

  std::string to_string() const;  // "1", "g^2 h"

 private:
  std::map<std::string, unsigned> exp_;  // no zero exponents
};

inline bool compatible(const FreeMonoidElem&, const FreeMonoidElem&) { return true; }

/// Z[M] for a commutative monoid M whose elements have a canonical form
/// and a total order. Elements are finite sums c_m e_m with c_m != 0 kept
/// in a sorted map, so equal elements have identical representations.
template <class M>
class MonoidRing {
 public:
  using Terms = std::map<M, Integer>;

  MonoidRing() = default;
  static MonoidRing basis(const M& m, const Integer& c = 1) {
    MonoidRing r;
    r.add_term(m, c);
    return r;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(const M& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  MonoidRing& operator+=(const MonoidRing& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MonoidRing& operator-=(const MonoidRing& o) { return *this += -o; }
  MonoidRing operator-() const {
    MonoidRing r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend MonoidRing operator+(MonoidRing x, const MonoidRing& y) { return x += y; }
  friend MonoidRing operator-(MonoidRing x, const MonoidRing& y) { return x -= y; }
  friend MonoidRing operator*(const MonoidRing& x, const MonoidRing& y) {
    x.require_compatible(y);
    MonoidRing r;
    for (const auto& [m1, c1] : x.terms_)
      for (const auto& [m2, c2] : y.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  friend bool operator==(const MonoidRing& x, const MonoidRing& y) { return x.terms_ == y.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      Integer a = abs(c);
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (a != 1) s += a.get_str() + "*";
      s += "e[" + m.to_string() + "]";
    }
    return s;
  }

 private:
  void add_term(const M& m, const Integer& c) {
    if (c == 0) return;
    if (!terms_.empty() && !compatible(terms_.begin()->first, m))
      throw ParameterMismatch("monoid ring: " + m.to_string() + " and " + terms_.begin()->first.to_string() +
                              " lie in different monoids");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  void require_compatible(const MonoidRing& o) const {
    if (terms_.empty() || o.terms_.empty()) return;
    const M& a = terms_.begin()->first;
    const M& b = o.terms_.begin()->first;
    if (!compatible(a, b))
      throw ParameterMismatch("monoid ring: " + a.to_string() + " and " + b.to_string() + " lie in different monoids");
  }

  Terms terms_;
};

using AVRing = MonoidRing<AVClass>;
using FreeMonoidRing = MonoidRing<FreeMonoidElem>;

struct ProjectiveSpace {
  unsigned n = 0;
};
// A variety the Albanese map has no rule for.
struct OpaqueVariety {
  std::string name;
};
using VarietyFactor = std::variant<AVClass, ProjectiveSpace, OpaqueVariety>;

/// e[Alb(X_1 x ... x X_k)] in Z[AV] for X = abelian varieties over `base`
/// and projective spaces; P^n contributes nothing, and the empty product
/// maps to the point T(0). DomainError on an opaque factor,
/// ParameterMismatch on another base.
AVRing albanese_image(const std::string& base, const QuadOrder& order, std::span<const VarietyFactor> factors);

template <class M>
struct ZeroDivisorWitness {
  bool accepted = false;
  std::string reason;
  MonoidRing<M> x, y, product;
};

/// Accepts iff x != 0, y != 0 and x y = 0; otherwise names the first
/// failed condition.
template <class M>
ZeroDivisorWitness<M> zero_divisor_witness(const MonoidRing<M>& x, const MonoidRing<M>& y) {
  ZeroDivisorWitness<M> w{false, {}, x, y, x * y};
  if (x.is_zero())
    w.reason = "first factor is zero";
  else if (y.is_zero())
    w.reason = "second factor is zero";
  else if (!w.product.is_zero())
    w.reason = "product is nonzero: " + w.product.to_string();
  else {
    w.accepted = true;
    w.reason = "x != 0, y != 0, x*y = 0";
  }
  return w;
}

}  // namespace kzero
