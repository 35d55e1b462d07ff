#pragma once

#include <compare>
#include <span>
#include <string>

#include "kzero/frac_ideal.hpp"

namespace kzero {

/// Isomorphism class of a finitely generated projective module over a
/// maximal quadratic order: rank and Steinitz class. A projective module
/// of rank n is isomorphic to O^(n-1) + I, with I in the Steinitz class.
class ModuleClass {
 public:
  // DomainError when rank is 0 and the class is nontrivial.
  ModuleClass(unsigned long rank, IdealClass steinitz);

  static ModuleClass zero(const QuadOrder& order) { return ModuleClass(0, trivial_class(order)); }
  static ModuleClass free(const QuadOrder& order, unsigned long rank) { return ModuleClass(rank, trivial_class(order)); }

  unsigned long rank() const noexcept { return rank_; }
  const IdealClass& steinitz() const noexcept { return steinitz_; }
  const QuadOrder& order() const noexcept { return steinitz_.order(); }

  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
  // rank first, then class
  friend std::strong_ordering operator<=>(const ModuleClass& x, const ModuleClass& y);

  std::string to_string() const;  // "(2, trivial)", "(1, [(2, sqrt(10))])"

 private:
  unsigned long rank_;
  IdealClass steinitz_;
};

// I_1 + ... + I_n  ~  (n, [I_1 ... I_n]). ParameterMismatch on classes
// from another order.
ModuleClass class_of_ideal_sum(const QuadOrder& order, std::span<const IdealClass> classes);

ModuleClass direct_sum(const ModuleClass& m1, const ModuleClass& m2);

/// M (x)_O A for a fixed abelian variety A with End(A) = O, tracked by
/// isomorphism class only. `base` names A.
struct AVClass {
  std::string base;
  ModuleClass module;

  friend bool operator==(const AVClass&, const AVClass&) = default;
  friend std::strong_ordering operator<=>(const AVClass& x, const AVClass& y);

  std::string to_string() const;  // "T_A(1, trivial)"
};

AVClass tensor_av(const ModuleClass& m, std::string base);

// T(M) x T(N) = T(M + N). ParameterMismatch for different bases or orders.
AVClass operator*(const AVClass& x, const AVClass& y);

bool compatible(const AVClass& x, const AVClass& y);

}  // namespace kzero
