#include <doctest.h>

#include <algorithm>

#include "flagchow/polynomial.hpp"

using namespace flagchow;

namespace {
Polynomial P(const std::string& text, int m) { return parse_polynomial(text, m); }
}

TEST_CASE("rational_roots finds all roots with multiplicity") {
  // (X - 1/2)(X + 3) X = X^3 + 5/2 X^2 - 3/2 X
  std::vector<Rational> coeffs{Rational(0), Rational(-3, 2), Rational(5, 2),
                               Rational(1)};
  auto roots = rational_roots(coeffs);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rational(-3));
  CHECK(roots[1] == Rational(0));
  CHECK(roots[2] == Rational(1, 2));

  // (X-1)^2 keeps multiplicity; X^2+1 has none.
  auto twice = rational_roots({Rational(1), Rational(-2), Rational(1)});
  CHECK(twice == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(rational_roots({Rational(1), Rational(0), Rational(1)}).empty());
}

TEST_CASE("linear_t_factorization recovers factor multisets") {
  Polynomial p = P("(T+X1)*(T+X2)*(T+X1+X2)", 2);
  auto factors = linear_t_factorization(p);
  REQUIRE(factors.has_value());
  REQUIRE(factors->size() == 3);
  Polynomial rebuilt = Polynomial::constant(1, 2);
  for (const auto& factor : *factors) rebuilt = rebuilt * factor.to_polynomial();
  CHECK(rebuilt == p);
  int with_both = 0;
  for (const auto& factor : *factors) {
    if (factor.x_coeffs[0] == 1 && factor.x_coeffs[1] == 1) ++with_both;
  }
  CHECK(with_both == 1);
}

TEST_CASE("linear_t_factorization reports irreducible and repeated inputs") {
  CHECK_FALSE(linear_t_factorization(P("T^2 + X1^2", 1)).has_value());
  auto cube = linear_t_factorization(P("T^3", 1));
  REQUIRE(cube.has_value());
  CHECK(cube->size() == 3);
  for (const auto& factor : *cube) {
    CHECK(factor.t_coeff == 1);
    CHECK(factor.x_coeffs[0] == 0);
  }
  // Rational coefficients are recovered exactly.
  auto halves = linear_t_factorization(P("(T+1/2*X1)*(T-3/2*X1)", 1));
  REQUIRE(halves.has_value());
  CHECK(halves->size() == 2);
}

TEST_CASE("linear_t_factorization validates its preconditions") {
  CHECK_THROWS_AS(linear_t_factorization(P("T + X1^2", 1)), Error);
  CHECK_THROWS_AS(linear_t_factorization(P("2*T", 1)), Error);
  CHECK_THROWS_AS(linear_t_factorization(P("0", 1)), Error);
}

TEST_CASE("linear_divisors lists every monic linear divisor once") {
  Polynomial p = P("(T+X1)*(T^2+X1^2)", 1);
  auto divisors = linear_divisors(p);
  REQUIRE(divisors.size() == 1);
  CHECK(divisors[0].x_coeffs[0] == 1);

  Polynomial q = P("(T+X1)*(T+2*X2)*(T-X1-X2)", 2);
  CHECK(linear_divisors(q).size() == 3);

  // A square factor is listed once; multiplicity is the caller's business.
  Polynomial square = P("(T+X1)^2*(T-X2)", 2);
  CHECK(linear_divisors(square).size() == 2);
}
