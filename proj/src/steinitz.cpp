#include "kzero/steinitz.hpp"

#include "kzero/errors.hpp"

namespace kzero {

ModuleClass::ModuleClass(unsigned long rank, IdealClass steinitz) : rank_(rank), steinitz_(std::move(steinitz)) {
  if (rank_ == 0 && !steinitz_.is_trivial())
    throw DomainError("the zero module has trivial Steinitz class, not " + steinitz_.to_string());
}

std::strong_ordering operator<=>(const ModuleClass& x, const ModuleClass& y) {
  if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
  return x.steinitz_ <=> y.steinitz_;
}

std::string ModuleClass::to_string() const {
  return "(" + std::to_string(rank_) + ", " + (steinitz_.is_trivial() ? "trivial" : steinitz_.to_string()) + ")";
}

ModuleClass class_of_ideal_sum(const QuadOrder& order, std::span<const IdealClass> classes) {
  IdealClass c = trivial_class(order);
  for (const auto& x : classes) {
    if (!(x.order() == order))
      throw ParameterMismatch("class_of_ideal_sum: " + x.to_string() + " is not a class of " + order.name());
    c = c * x;
  }
  return ModuleClass(classes.size(), c);
}

ModuleClass direct_sum(const ModuleClass& m1, const ModuleClass& m2) {
  if (!(m1.order() == m2.order()))
    throw ParameterMismatch("direct_sum: modules over " + m1.order().name() + " and " + m2.order().name());
  return ModuleClass(m1.rank() + m2.rank(), m1.steinitz() * m2.steinitz());
}

std::strong_ordering operator<=>(const AVClass& x, const AVClass& y) {
  if (auto c = x.base <=> y.base; c != 0) return c;
  return x.module <=> y.module;
}

std::string AVClass::to_string() const { return "T_" + base + module.to_string(); }

AVClass tensor_av(const ModuleClass& m, std::string base) { return AVClass{std::move(base), m}; }

bool compatible(const AVClass& x, const AVClass& y) { return x.base == y.base && x.module.order() == y.module.order(); }

AVClass operator*(const AVClass& x, const AVClass& y) {
  if (!compatible(x, y))
    throw ParameterMismatch("product of " + x.to_string() + " over " + x.module.order().name() + " and " +
                            y.to_string() + " over " + y.module.order().name());
  return AVClass{x.base, direct_sum(x.module, y.module)};
}

}  // namespace kzero
