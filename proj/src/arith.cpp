#include "kzero/arith.hpp"

#include "kzero/errors.hpp"

namespace kzero {

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<Integer> positive_divisors(const Integer& n, const Integer& max_abs) {
  if (n == 0) throw DomainError("divisors of zero");
  Integer m = abs(n);
  if (m > max_abs) throw ResourceError("divisor enumeration bound exceeded for " + m.get_str());
  std::vector<Integer> small, large;
  for (Integer k = 1; k * k <= m; ++k) {
    if (m % k == 0) {
      small.push_back(k);
      Integer other = m / k;
      if (other != k) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) throw DomainError("prime factors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace kzero
