#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kzero/arith.hpp"
#include "kzero/int_poly.hpp"

namespace kzero::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long num_range, long den_max) {
    return make_rational(uniform(-num_range, num_range), uniform(1, den_max));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

  IntPoly poly(int degree, long coeff_range) {
    std::vector<Integer> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(-coeff_range, coeff_range));
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline const std::vector<std::int64_t> kSampleFields{-163, -23, -15, -5, -1, 2, 3, 5, 6, 7, 10, 13, 15, 79, 82};

}  // namespace kzero::testing
