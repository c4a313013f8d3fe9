#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fdhg/gammafn.hpp"
#include "fdhg/scalar.hpp"

using namespace fdhg;

TEST_CASE("rational round trip") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("-9") == Rational(-9));
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational("x"), domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
  CHECK(pochhammer(Rational(-3), 4) == Rational(0));
  CHECK(pochhammer(Rational(-3), 3) == Rational(-6));
  CHECK(std::abs(pochhammer(Complex(0.5), 3) - Complex(1.875)) < 1e-15);
}

TEST_CASE("reciprocal integer gamma") {
  CHECK(rgamma_int(4) == Rational(1, 6));
  CHECK(rgamma_int(1) == Rational(1));
  CHECK(rgamma_int(0) == Rational(0));
  CHECK(rgamma_int(-7) == Rational(0));
}

TEST_CASE("gamma ratio as rational function") {
  // Gamma(z)/Gamma(z+3) = 1/(z(z+1)(z+2))
  Rational z(1, 3);
  CHECK(gamma_ratio(z, 3) == Rational(1) / (z * (z + 1) * (z + 2)));
  // Gamma(z)/Gamma(z-2) = (z-1)(z-2)
  CHECK(gamma_ratio(z, -2) == (z - 1) * (z - 2));
  CHECK(gamma_ratio(z, 0) == Rational(1));
}

TEST_CASE("integer powers") {
  CHECK(ipow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(ipow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(ipow(Rational(5), 0) == Rational(1));
}

TEST_CASE("integer detection") {
  CHECK(is_integer(Rational(-4)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
  CHECK(to_int(Rational(12)) == 12);
}

TEST_CASE("complex gamma") {
  CHECK(std::abs(gamma_complex(Complex(5.0)) - Complex(24.0)) < 1e-11);
  CHECK(std::abs(gamma_complex(Complex(0.5)) -
                 Complex(std::sqrt(std::numbers::pi))) < 1e-13);
  // reflection region
  Complex g = gamma_complex(Complex(-0.5));
  CHECK(std::abs(g - Complex(-2.0 * std::sqrt(std::numbers::pi))) < 1e-12);
  // functional equation off the real axis
  Complex z(0.3, 0.7);
  CHECK(std::abs(gamma_complex(z + Complex(1)) - z * gamma_complex(z)) <
        1e-12 * std::abs(gamma_complex(z)));
  CHECK_THROWS_AS(gamma_complex(Complex(-3.0)), domain_error);
}

TEST_CASE("power with negative-real branch at arg = -pi") {
  Complex v = pow_branch(Complex(-1.0, 0.0), Complex(0.5));
  CHECK(std::abs(v - Complex(0.0, -1.0)) < 1e-15);  // e^{-i pi/2}
  CHECK(std::abs(pow_branch(Complex(4.0, 0.0), Complex(0.5)) - Complex(2.0)) <
        1e-15);
}
