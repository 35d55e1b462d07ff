#include "kzero/resultant.hpp"

namespace kzero {

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
  auto s = sylvester_matrix<Integer>(f.coefficients(), g.coefficients());
  return bareiss_determinant<Integer>(std::move(s), Integer(1));
}

Rational discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("discriminant of a constant polynomial");
  const long n = f.degree();
  Integer res = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return make_rational(res, f.leading());
}

IntPoly power_resultant(const IntPoly& f, unsigned k) {
  if (f.is_zero()) throw DomainError("resultant with the zero polynomial");
  if (k == 0) throw DomainError("power_resultant needs a positive exponent");
  std::vector<IntPoly> fy;
  for (const auto& c : f.coefficients()) fy.push_back(IntPoly::constant(c));
  // x - y^k, coefficients in Z[x]
  std::vector<IntPoly> gy(k + 1);
  gy[0] = IntPoly::x();
  gy[k] = IntPoly::constant(-1);
  auto s = sylvester_matrix<IntPoly>(fy, gy);
  return bareiss_determinant<IntPoly>(std::move(s), IntPoly::constant(1));
}

}  // namespace kzero
