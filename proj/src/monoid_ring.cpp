#include "kzero/monoid_ring.hpp"

namespace kzero {

FreeMonoidElem FreeMonoidElem::generator(const std::string& name, unsigned exponent) {
  if (name.empty()) throw DomainError("free monoid generator needs a name");
  FreeMonoidElem g;
  if (exponent > 0) g.exp_[name] = exponent;
  return g;
}

unsigned FreeMonoidElem::degree() const {
  unsigned d = 0;
  for (const auto& [g, e] : exp_) d += e;
  return d;
}

FreeMonoidElem operator*(const FreeMonoidElem& x, const FreeMonoidElem& y) {
  FreeMonoidElem r = x;
  for (const auto& [g, e] : y.exp_) r.exp_[g] += e;
  return r;
}

std::strong_ordering operator<=>(const FreeMonoidElem& x, const FreeMonoidElem& y) {
  auto i = x.exp_.begin(), j = y.exp_.begin();
  for (; i != x.exp_.end() && j != y.exp_.end(); ++i, ++j) {
    // a generator missing on one side has exponent 0 there
    if (i->first != j->first) return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
  }
  if (i != x.exp_.end()) return std::strong_ordering::greater;
  if (j != y.exp_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string FreeMonoidElem::to_string() const {
  if (exp_.empty()) return "1";
  std::string s;
  for (const auto& [g, e] : exp_) {
    if (!s.empty()) s += ' ';
    s += g;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

AVRing albanese_image(const std::string& base, const QuadOrder& order, std::span<const VarietyFactor> factors) {
  AVClass acc = tensor_av(ModuleClass::zero(order), base);
  for (const auto& f : factors) {
    if (const auto* av = std::get_if<AVClass>(&f)) {
      acc = acc * *av;
    } else if (const auto* o = std::get_if<OpaqueVariety>(&f)) {
      throw DomainError("albanese_image: no Albanese rule for " + o->name);
    }
  }
  return AVRing::basis(acc);
}

}  // namespace kzero
