#pragma once

#include "kzero/arith.hpp"
#include "kzero/errors.hpp"

namespace kzero {

// (P + sqrt D)/Q with D > 0 non-square and Q | D - P^2; one step of the
// continued fraction replaces it by 1/(theta - a) in the same form.
class QuadraticIrrational {
 public:
  QuadraticIrrational(Integer D, Integer P, Integer Q)
      : D_(std::move(D)), root_(isqrt(D_)), P_(std::move(P)), Q_(std::move(Q)) {
    if (Q_ == 0 || (D_ - P_ * P_) % Q_ != 0) throw DomainError("quadratic irrational not in normalized form");
  }

  const Integer& P() const noexcept { return P_; }
  const Integer& Q() const noexcept { return Q_; }

  Integer floor() const {
    // sqrt D is irrational, so floor((P + sqrt D)/|Q|) = floor((P + isqrt D)/|Q|)
    if (Q_ > 0) return floor_div(P_ + root_, Q_);
    return -(floor_div(P_ + root_, -Q_) + 1);
  }

  void advance(const Integer& a) {
    P_ = a * Q_ - P_;
    Q_ = (D_ - P_ * P_) / Q_;
  }

 private:
  Integer D_, root_, P_, Q_;
};

}  // namespace kzero
