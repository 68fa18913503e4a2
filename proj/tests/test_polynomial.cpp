#include <doctest.h>

#include "kummer7/errors.hpp"
#include "kummer7/polynomial.hpp"

using namespace kummer7;

TEST_CASE("univariate basics") {
  const UPoly f{1, 5, -8, 1};  // t^3 - 8t^2 + 5t + 1
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "t^3 - 8*t^2 + 5*t + 1");
  CHECK(f(BigInt(2)) == 8 - 32 + 10 + 1);
  CHECK(f(Rational(1, 2)) == Rational(1, 8) - 2 + Rational(5, 2) + 1);
  CHECK(f.derivative() == UPoly{5, -16, 3});
  CHECK(UPoly{}.degree() == -1);
  CHECK(UPoly{0, 0, 0}.is_zero());
  CHECK(UPoly{6, 4, 2}.content() == 2);
  CHECK(UPoly{-6, -4, -2}.primitive_part() == UPoly{3, 2, 1});
  CHECK(UPoly{0, 0, 3, 1}.valuation() == 2);
  CHECK(UPoly::linear_root(Rational(2, 3)) == UPoly{-2, 3});
  CHECK(pow(UPoly{-1, 1}, 3) == UPoly{-1, 3, -3, 1});
}

TEST_CASE("division and gcd") {
  const UPoly a = UPoly{-1, 1} * UPoly{1, 5, -8, 1};
  CHECK(exact_quotient(a, UPoly{-1, 1}) == UPoly{1, 5, -8, 1});
  CHECK_THROWS_AS(exact_quotient(a, UPoly{1, 1}), ArgumentError);
  CHECK(divides(UPoly{1, 5, -8, 1}, a));
  CHECK_FALSE(divides(UPoly{0, 1}, a));
  CHECK(pseudo_remainder(a, UPoly{-1, 1}).is_zero());

  const UPoly g = UPoly{1, 1} * UPoly{2, 0, 1};
  CHECK(gcd(g * UPoly{3, 7}, g * UPoly{-5, 2}) == g);
  CHECK(gcd(UPoly{2, 4}, UPoly{3, 6}) == UPoly{1, 2});
  CHECK(gcd(UPoly{1, 1}, UPoly{-1, 1}) == UPoly{1});
  CHECK(gcd(UPoly{}, UPoly{}).is_zero());
}

TEST_CASE("square-free decomposition") {
  // 5 (t^2+1) t^2 (t-1)^3
  const UPoly a = BigInt(5) * UPoly{1, 0, 1} * pow(UPoly{0, 1}, 2) * pow(UPoly{-1, 1}, 3);
  const auto sf = squarefree_decomposition(a);
  REQUIRE(sf.size() == 3);
  CHECK(sf[0] == std::pair<UPoly, int>{UPoly{1, 0, 1}, 1});
  CHECK(sf[1] == std::pair<UPoly, int>{UPoly{0, 1}, 2});
  CHECK(sf[2] == std::pair<UPoly, int>{UPoly{-1, 1}, 3});
  UPoly back{5};
  for (const auto& [f, m] : sf) back = back * pow(f, static_cast<unsigned>(m));
  CHECK(back == a);
}

TEST_CASE("rational roots") {
  const UPoly a = pow(UPoly{0, 1}, 7) * pow(UPoly{-1, 1}, 7) * UPoly{1, 5, -8, 1} * UPoly{-2, 3};
  const auto roots = rational_roots(a);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::pair<Rational, int>{Rational(0), 7});
  CHECK(roots[1] == std::pair<Rational, int>{Rational(2, 3), 1});
  CHECK(roots[2] == std::pair<Rational, int>{Rational(1), 7});
  CHECK(rational_roots(UPoly{1, 5, -8, 1}).empty());
  CHECK(rational_roots(UPoly{1, 0, 1}).empty());
}

TEST_CASE("cubic discriminant") {
  CHECK(cubic_discriminant(UPoly{1}, UPoly{-8}, UPoly{5}, UPoly{1}) == UPoly{2401});
  // x^3 - x has discriminant 4.
  CHECK(cubic_discriminant(UPoly{1}, UPoly{}, UPoly{-1}, UPoly{}) == UPoly{4});
  // x^3 + t: -27 t^2
  CHECK(cubic_discriminant(UPoly{1}, UPoly{}, UPoly{}, UPoly{0, 1}) == UPoly{0, 0, -27});
}

TEST_CASE("rational functions") {
  const RationalFunctionQ r(UPoly{-2, 2} * UPoly{0, 1}, UPoly{0, 0, 4} * UPoly{1, 1});
  CHECK(r.numerator() == UPoly{-1, 1});
  CHECK(r.denominator() == UPoly{0, 2, 2});
  CHECK(*r(Rational(2)) == Rational(1, 12));
  CHECK_FALSE(r(Rational(-1)).has_value());
  CHECK(r.pole_order_at_infinity() == 0);
  CHECK(RationalFunctionQ(UPoly{0, 0, 0, 1}, UPoly{1, 1}).pole_order_at_infinity() == 2);
  CHECK(RationalFunctionQ(UPoly{1}, UPoly{0, -1}).denominator() == UPoly{0, 1});
  CHECK_THROWS_AS(RationalFunctionQ(UPoly{1}, UPoly{}), ArgumentError);
}

TEST_CASE("multivariate arithmetic") {
  const MPoly x = MPoly::var(MPoly::X), y = MPoly::var(MPoly::Y), t = MPoly::var(MPoly::T);
  const MPoly f = x * x * y + 3 * t - 1;
  CHECK(f.degree_in(MPoly::X) == 2);
  CHECK(f.coeff({2, 1, 0, 0}) == 1);
  CHECK(f.coefficient_in(MPoly::X, 0) == 3 * t - 1);
  CHECK(f.derivative(MPoly::X) == 2 * x * y);
  CHECK(f.evaluate({2, 3, 0, 5}) == 12 + 15 - 1);
  CHECK(f.substitute(MPoly::X, y + 1) == (y + 1) * (y + 1) * y + 3 * t - 1);
  CHECK(pow(x + y, 3) == x * x * x + 3 * x * x * y + 3 * x * y * y + y * y * y);
  CHECK((x * x * x + t).homogeneous_degree({MPoly::X, MPoly::Y}) == std::nullopt);
  CHECK((x * x * y + t * x * y * y).homogeneous_degree({MPoly::X, MPoly::Y}) == 3u);
  // 2^2 * f(x/2)
  CHECK(f.scaled_substitution(MPoly::X, 2) == x * x * y + 4 * (3 * t - 1));
  CHECK((t * t * x + t + 2).reversed_in(MPoly::T) == x + t + 2 * t * t);
  CHECK((t * t - 1).to_upoly(MPoly::T) == UPoly{-1, 0, 1});
  CHECK(MPoly::from_upoly(UPoly{-1, 0, 1}, MPoly::T) == t * t - 1);
  CHECK_THROWS(f.to_upoly(MPoly::T));
}
