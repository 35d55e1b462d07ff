#include <doctest.h>

#include "kzero/errors.hpp"
#include "kzero/quad_element.hpp"
#include "kzero/quartic.hpp"
#include "kzero/resultant.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace kzero;

namespace {
const IntPoly P17{289, -136, 40, -8, 1};
const IntPoly P19{361, -76, 32, -4, 1};
}  // namespace

TEST_CASE("quadratic field arithmetic") {
  QuadElement a17(10, 4, -1);
  CHECK(a17.norm() == 6);
  CHECK(a17.trace() == 8);
  CHECK(QuadElement(10, 0, 1).norm() == -10);
  CHECK(QuadElement(7, make_rational(3, 2)).conj() == QuadElement(7, make_rational(3, 2)));
  CHECK((a17 * a17.inverse()) == QuadElement(10, 1));
  CHECK(a17.to_string() == "4 - sqrt(10)");

  CHECK_THROWS_AS(QuadElement(12, 1, 1), DomainError);
  CHECK_THROWS_AS(QuadElement(1, 1, 1), DomainError);
  CHECK_THROWS_AS(QuadElement(0, 1, 1), DomainError);
  CHECK_THROWS_AS(a17 + QuadElement(2, 1, 1), ParameterMismatch);
  CHECK_THROWS_AS(a17 * QuadElement(-5, 1, 1), ParameterMismatch);
  CHECK_THROWS_AS(QuadElement(10, 0).inverse(), DomainError);
}

TEST_CASE("exact sign of real quadratic elements") {
  CHECK(QuadElement(10, 4, -1).sign() == 1);
  CHECK(QuadElement(10, 3, -1).sign() == -1);  // 3 < sqrt 10
  CHECK(QuadElement(10, -4, 1).sign() == -1);
  CHECK(QuadElement(2, 0, 0).sign() == 0);
  CHECK_THROWS_AS(QuadElement(-5, 1, 1).sign(), DomainError);
}

TEST_CASE("norm is multiplicative and conjugation is a ring automorphism") {
  testing::Rng rng(0x5eed01);
  for (int i = 0; i < 1000; ++i) {
    auto d = rng.pick(testing::kSampleFields);
    QuadElement x(d, rng.rational(50, 9), rng.rational(50, 9));
    QuadElement y(d, rng.rational(50, 9), rng.rational(50, 9));
    REQUIRE((x * y).norm() == x.norm() * y.norm());
    REQUIRE((x + y).conj() == x.conj() + y.conj());
    REQUIRE((x * y).conj() == x.conj() * y.conj());
    REQUIRE((x * x.conj()).b() == 0);
  }
}

TEST_CASE("polynomial ring operations") {
  CHECK(IntPoly{1, 1} * IntPoly{-1, 1} == IntPoly{-1, 0, 1});
  CHECK(P17.derivative() == IntPoly{-136, 80, -24, 4});
  CHECK(P17(Integer(0)) == 289);
  CHECK(P17(make_rational(1, 2)) == make_rational(3681, 16));
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{0, 0, 0}.degree() == -1);
  CHECK(P17.to_string() == "x^4 - 8x^3 + 40x^2 - 136x + 289");
  CHECK(IntPoly{6, 4, 2}.content() == 2);
  CHECK(exact_quotient(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
  CHECK_THROWS_AS(exact_quotient(IntPoly{1, 0, 1}, IntPoly{1, 1}), DomainError);
}

TEST_CASE("polynomial gcd and squarefree part") {
  IntPoly f = IntPoly{1, 0, 1} * IntPoly{1, 0, 1} * IntPoly{-3, 1};
  CHECK(squarefree_part(f) == IntPoly{1, 0, 1} * IntPoly{-3, 1});
  CHECK(gcd(IntPoly{-1, 0, 1} * Integer(6), IntPoly{1, 1} * Integer(4)) == IntPoly{1, 1});
  CHECK(gcd(P17, P19) == IntPoly::constant(1));
}

TEST_CASE("resultant") {
  CHECK(resultant(IntPoly{-2, 1}, IntPoly{1, 0, 1}) == 5);
  CHECK(resultant(IntPoly{-10, 0, 1}, IntPoly{-10, 0, 1}) == 0);
  CHECK(resultant(IntPoly::constant(3), IntPoly{1, 2, 1}) == 9);
  CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), DomainError);

  testing::Rng rng(0x5eed02);
  for (int i = 0; i < 300; ++i) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(1, 4)), 9);
    IntPoly g = rng.poly(static_cast<int>(rng.uniform(1, 3)), 9);
    Integer fg = resultant(f, g), gf = resultant(g, f);
    REQUIRE(fg == ((f.degree() * g.degree()) % 2 ? -gf : gf));
    REQUIRE(fg == oracle::leibniz_det(oracle::sylvester_textbook(f, g), Integer(1)));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(IntPoly{7, -5, 1}) == 25 - 28);
  CHECK(discriminant(oracle::from_roots({1, 2, 3})) == 4);
  CHECK_THROWS_AS(discriminant(IntPoly::constant(5)), DomainError);

  // regression constants, each cross-checked against the closed-form quartic discriminant
  CHECK(oracle::quartic_discriminant_formula(P17) == 519737600);
  CHECK(oracle::quartic_discriminant_formula(P19) == 2127878400);
  CHECK(discriminant(P17) == 519737600);
  CHECK(discriminant(P19) == 2127878400);
}

TEST_CASE("discriminant agrees with squared root differences") {
  testing::Rng rng(0x5eed03);
  for (int i = 0; i < 500; ++i) {
    std::vector<Integer> roots;
    int n = static_cast<int>(rng.uniform(1, 4));
    for (int k = 0; k < n; ++k) roots.emplace_back(rng.uniform(-12, 12));
    IntPoly f = oracle::from_roots(roots);
    REQUIRE(discriminant(f) == oracle::root_product_discriminant(roots));
  }
  for (int i = 0; i < 200; ++i) {
    IntPoly f = rng.poly(4, 20);
    REQUIRE(discriminant(f) == oracle::quartic_discriminant_formula(f));
  }
}

TEST_CASE("quartic factorization") {
  auto sg = factor_quartic(IntPoly{4, 0, 0, 0, 1});
  REQUIRE(sg.factors.size() == 2);
  CHECK(sg.factors[0] == IntPoly{2, -2, 1});
  CHECK(sg.factors[1] == IntPoly{2, 2, 1});
  CHECK(sg.product() == sg.input);

  CHECK(factor_quartic(P17).irreducible());
  CHECK(factor_quartic(P19).irreducible());
  CHECK(factor_quartic(IntPoly{4, 0, 2, 0, 1}).irreducible());

  auto sq = factor_quartic(IntPoly{1, 0, 2, 0, 1});
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.factors[0] == IntPoly{1, 0, 1});
  CHECK(sq.factors[1] == IntPoly{1, 0, 1});

  auto lin = factor_quartic(oracle::from_roots({0, 0, 3, -3}));
  CHECK(lin.factors.size() == 4);
  CHECK(lin.product() == lin.input);

  CHECK_THROWS_AS(factor_quartic(IntPoly{1, 0, 0, 1}), DomainError);
  CHECK_THROWS_AS(factor_quartic(IntPoly{1, 0, 0, 0, 2}), DomainError);
}

TEST_CASE("products of random monic quadratics factor back exactly") {
  testing::Rng rng(0x5eed04);
  for (int i = 0; i < 500; ++i) {
    IntPoly q1{Integer(rng.uniform(-30, 30)), Integer(rng.uniform(-15, 15)), 1};
    IntPoly q2{Integer(rng.uniform(-30, 30)), Integer(rng.uniform(-15, 15)), 1};
    if (q1.coeff(0) == 0) q1 += IntPoly::constant(1);
    IntPoly f = q1 * q2;
    auto fac = factor_quartic(f);
    REQUIRE(fac.product() == f);
    REQUIRE(fac.factors.size() >= 2);
    for (const auto& g : fac.factors) REQUIRE(is_irreducible_monic(g));
  }
}

TEST_CASE("rational squares") {
  CHECK(is_rational_square(make_rational(9, 4)));
  CHECK_FALSE(is_rational_square(Rational(-1)));
  CHECK_FALSE(is_rational_square(Rational(10)));
  CHECK(is_rational_square(Rational(0)));
  CHECK_FALSE(is_rational_square(make_rational(519737600, 2127878400)));
  testing::Rng rng(0x5eed05);
  for (int i = 0; i < 1000; ++i) {
    Rational q = rng.rational(100000, 100000);
    REQUIRE(is_rational_square(q * q));
  }
}

TEST_CASE("number-theoretic helpers") {
  CHECK(is_squarefree(10));
  CHECK(is_squarefree(-5));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(0));
  CHECK(positive_divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(prime_factors(Integer(-360)) == std::vector<Integer>{2, 3, 5});
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(mod_floor(Integer(-7), Integer(3)) == 2);
}
