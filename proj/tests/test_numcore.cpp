#include <catch2/catch_amalgamated.hpp>

#include "biracah/complexhp.hpp"
#include "biracah/jacobi.hpp"
#include "biracah/numeric.hpp"

#include "oracles.hpp"

using namespace biracah;

namespace {
Real tol(long offset) {
  return pow_int(Real(10), -(static_cast<long>(precision()) - offset));
}
}  // namespace

TEST_CASE("rational parsing is strict and canonicalizing") {
  REQUIRE(parse_rational("1/2") == Rational(1, 2));
  REQUIRE(parse_rational("-3/6") == Rational(-1, 2));
  REQUIRE(to_string(parse_rational("-3/6")) == "-1/2");
  REQUIRE(parse_rational("7") == Rational(7));
  REQUIRE(to_string(parse_rational("7")) == "7");
  REQUIRE(parse_rational("+5/10") == Rational(1, 2));

  REQUIRE_THROWS_AS(parse_rational("1//2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational(" 1/2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("/2"), std::invalid_argument);
}

TEST_CASE("pochhammer, binomial, factorial are exact") {
  REQUIRE(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  REQUIRE(pochhammer(Rational(-2), 3) == Rational(0));
  REQUIRE(pochhammer(Rational(3), 0) == Rational(1));

  REQUIRE(binom_general<Rational>(Rational(5), 2) == Rational(10));
  REQUIRE(binom_general<Rational>(Rational(5), 0) == Rational(1));
  REQUIRE(binom_general<Rational>(Rational(5), -1) == Rational(0));
  REQUIRE(binom_general<Rational>(Rational(-1, 2), 2) == Rational(3, 8));

  REQUIRE(factorial_exact(0) == Rational(1));
  REQUIRE(factorial_exact(5) == Rational(120));
  REQUIRE_THROWS_AS(factorial_exact(-1), domain_error);
}

TEST_CASE("gamma at rational points") {
  set_precision(60);
  REQUIRE(abs(gamma_hp(Rational(1, 2)) - sqrt(pi_value())) < tol(58));
  REQUIRE(abs(gamma_hp(Rational(5)) - 24) < tol(55));
  // Recurrence Gamma(x+1) = x Gamma(x) at a non-trivial point.
  const Rational x(7, 3);
  REQUIRE(abs(gamma_hp(x + 1) - to_real(x) * gamma_hp(x)) < tol(55));
  REQUIRE_THROWS_AS(gamma_hp(Rational(0)), pole_error);
  REQUIRE_THROWS_AS(gamma_hp(Rational(-3)), pole_error);
}

TEST_CASE("precision control and guarded square root") {
  REQUIRE_THROWS_AS(set_precision(5), std::invalid_argument);
  REQUIRE_THROWS_AS(set_precision(20000), std::invalid_argument);
  set_precision(60);
  REQUIRE(precision() == 60);
  REQUIRE_THROWS_AS(sqrt_checked(Rational(-1), "test"), negative_radicand_error);
  REQUIRE(abs(sqrt_checked(Rational(9, 4), "test") - Real(3) / 2) < tol(58));
  REQUIRE(pow_int(Real(2), 10) == 1024);
  REQUIRE(abs(pow_int(Real(2), -3) - Real(1) / 8) < tol(58));
}

TEST_CASE("complex arithmetic and principal square root") {
  set_precision(60);
  const Complex a{Real(1), Real(2)}, b{Real(3), Real(-1)};
  const Complex prod = a * b;
  REQUIRE(prod.re == 5);
  REQUIRE(prod.im == 5);
  const Complex quot = prod / b;
  REQUIRE(abs(quot - a) < tol(55));

  REQUIRE(abs(Complex{Real(3), Real(4)}) == 5);

  // Principal branch: sqrt(-1) = i, sqrt(-2i) = 1 - i.
  const Complex si = sqrt(Complex{Real(-1), Real(0)});
  REQUIRE(abs(si - Complex{Real(0), Real(1)}) < tol(55));
  const Complex sm = sqrt(Complex{Real(0), Real(-2)});
  REQUIRE(abs(sm - Complex{Real(1), Real(-1)}) < tol(55));

  const Complex u = unit_circle(pi_value() / 2);
  REQUIRE(abs(u - Complex{Real(0), Real(1)}) < tol(55));

  REQUIRE(abs(pow_int(a, 3) - a * a * a) < tol(54));
  REQUIRE(abs(pow_int(a, -2) * (a * a) - Complex{Real(1)}) < tol(54));

  REQUIRE(abs(i_times(a) - Complex{Real(-2), Real(1)}) == 0);
  REQUIRE(abs(conj(a) - Complex{Real(1), Real(-2)}) == 0);
}

TEST_CASE("jacobi recurrence matches hypergeometric oracle exactly") {
  // Exact rational agreement for degrees up to 6 at assorted parameters.
  const Rational as[] = {Rational(1, 3), Rational(-1, 4), Rational(5, 2), Rational(7, 5)};
  const Rational bs[] = {Rational(2, 7), Rational(3, 4), Rational(-2, 5), Rational(1, 6)};
  const Rational xs[] = {Rational(0), Rational(1), Rational(-1), Rational(2, 3),
                         Rational(-7, 4)};
  for (const auto& a : as)
    for (const auto& b : bs)
      for (const auto& x : xs)
        for (long n = 0; n <= 6; ++n)
          REQUIRE(jacobi_exact(n, a, b, x) == oracles::jacobi_hyper(n, a, b, x));
}

TEST_CASE("jacobi boundary values and degenerate degrees") {
  const Rational a(1, 3), b(3, 4);
  for (long n = 0; n <= 6; ++n)
    REQUIRE(jacobi_exact(n, a, b, Rational(1)) == binom_general<Rational>(n + a, n));
  REQUIRE(jacobi_exact(-1, a, b, Rational(2)) == Rational(0));
  REQUIRE(jacobi_exact(0, a, b, Rational(2)) == Rational(1));
}
