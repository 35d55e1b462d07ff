#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kzero/errors.hpp"
#include "kzero/int_poly.hpp"

namespace kzero {

template <class R>
using Matrix = std::vector<std::vector<R>>;

namespace detail {

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const IntPoly& x) { return x.is_zero(); }
inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return exact_quotient(a, b); }

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. R must be an
/// integral domain in which the intermediate quotients are exact: Integer
/// and IntPoly both qualify.
template <class R>
R bareiss_determinant(Matrix<R> m, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && detail::is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return R{};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = detail::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R{} - det : det;
}

/// Sylvester matrix of f (degree m) and g (degree n), coefficients given
/// constant term first. Rows 0..n-1 carry shifts of f, rows n..n+m-1
/// shifts of g, leading coefficients on the left.
template <class R>
Matrix<R> sylvester_matrix(std::span<const R> f, std::span<const R> g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  Matrix<R> s(size, std::vector<R>(size, R{}));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f[m - i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g[n - i];
  return s;
}

// Determinant of the Sylvester matrix. Both polynomials must be nonzero.
Integer resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f); deg f >= 1.
Rational discriminant(const IntPoly& f);

// Res_y(f(y), x - y^k) as a polynomial in x. For monic f this is the
// characteristic polynomial of pi^k over Q, pi a root of f.
IntPoly power_resultant(const IntPoly& f, unsigned k);

}  // namespace kzero
