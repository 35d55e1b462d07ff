#include "kzero/class_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kzero/errors.hpp"

namespace kzero {
namespace {

// 314159/100000 < pi, so this overestimates (2/pi) sqrt|D|.
const Integer kPiNum = 314159;
const Integer kPiDen = 100000;

long order_of(const IdealClass& x, const std::vector<Integer>& divisors_of_h) {
  for (const auto& e : divisors_of_h)
    if (x.pow(e.get_si()).is_trivial()) return e.get_si();
  throw std::logic_error("element order does not divide the group order");
}

std::vector<Integer> invariant_factors(const std::vector<long>& orders, const Integer& h) {
  if (h == 1) return {};
  // per prime q: exponents of the cyclic q-factors, largest first
  std::vector<std::pair<Integer, std::vector<unsigned>>> parts;
  for (const Integer& q : prime_factors(h)) {
    unsigned v = 0;
    for (Integer m = h; m % q == 0; m /= q) ++v;
    std::vector<unsigned> rank_ge;  // rank_ge[i-1] = #factors with exponent >= i
    unsigned prev = 0;
    Integer qi = 1;
    for (unsigned i = 1;; ++i) {
      qi *= q;
      std::size_t count = std::count_if(orders.begin(), orders.end(),
                                        [&](long o) { return qi % o == 0; });
      unsigned r = 0;
      for (Integer c = count; c > 1; c /= q) ++r;
      rank_ge.push_back(r - prev);
      prev = r;
      if (r == v) break;
    }
    std::vector<unsigned> exps(rank_ge.empty() ? 0 : rank_ge.front(), 0);
    for (unsigned n : rank_ge)
      for (unsigned j = 0; j < n; ++j) ++exps[j];
    parts.emplace_back(q, std::move(exps));
  }
  std::size_t width = 0;
  for (const auto& [q, exps] : parts) width = std::max(width, exps.size());
  std::vector<Integer> inv(width, Integer(1));
  for (const auto& [q, exps] : parts)
    for (std::size_t j = 0; j < exps.size(); ++j) {
      Integer qe;
      mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), exps[j]);
      inv[j] *= qe;
    }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

}  // namespace

Integer minkowski_prime_bound(const QuadOrder& order) {
  const Integer& D = order.discriminant();
  if (order.is_real()) return isqrt(D / 4);
  return isqrt((4 * abs(D) * kPiDen * kPiDen) / (kPiNum * kPiNum));
}

std::vector<FracIdeal> split_prime_ideals(const QuadOrder& order, const Integer& bound) {
  std::vector<FracIdeal> out;
  for (Integer p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (Integer b = 0; b < p; ++b)
      if (order.norm_form(b, 1) % p == 0) out.emplace_back(order, p, b);
  }
  return out;
}

std::string ClassGroup::structure() const {
  if (invariants.empty()) return "trivial";
  std::string s;
  for (const auto& n : invariants) s += (s.empty() ? "Z/" : " x Z/") + n.get_str();
  return s;
}

ClassGroup class_group(const QuadOrder& order, const Integer& max_abs_disc) {
  if (abs(order.discriminant()) > max_abs_disc)
    throw ResourceError("|disc| = " + Integer(abs(order.discriminant())).get_str() + " exceeds the class group bound " +
                        max_abs_disc.get_str());
  ClassGroup g;
  g.discriminant = order.discriminant();
  std::set<IdealClass> subgroup{trivial_class(order)};
  for (const FracIdeal& P : split_prime_ideals(order, minkowski_prime_bound(order))) {
    IdealClass c = class_of(P);
    if (subgroup.contains(c)) continue;
    g.generators.push_back(P);
    // H' = union of H c^k for k < m, m least with c^m in H
    std::vector<IdealClass> powers{trivial_class(order)};
    for (IdealClass x = c; !subgroup.contains(x); x = x * c) powers.push_back(x);
    std::set<IdealClass> next;
    for (const auto& h : subgroup)
      for (const auto& ck : powers) next.insert(h * ck);
    subgroup = std::move(next);
  }
  g.elements.assign(subgroup.begin(), subgroup.end());
  g.class_number = static_cast<unsigned long>(g.elements.size());
  std::vector<Integer> divisors = positive_divisors(g.class_number);
  std::vector<long> orders;
  orders.reserve(g.elements.size());
  for (const auto& x : g.elements) orders.push_back(order_of(x, divisors));
  g.invariants = invariant_factors(orders, g.class_number);
  return g;
}

}  // namespace kzero
