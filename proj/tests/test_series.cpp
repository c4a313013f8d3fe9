#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdhg/annihilate.hpp"
#include "fdhg/laurent.hpp"
#include "fdhg/series.hpp"

using namespace fdhg;

TEST_CASE("m=1 series specializes to 2F1") {
  Params<Complex> p{Complex(0.31), {Complex(0.27)}, Complex(1.63)};
  XPoint<Complex> x({Complex(0.2)});
  Truncation t;
  t.order = 60;
  auto v = fd_series(p, x, t);
  double ref = gauss_2f1(0.31, 0.27, 1.63, 0.2, 60);
  CHECK(std::abs(v.value.real() - ref) < 1e-13);
  CHECK(std::abs(v.value.imag()) < 1e-15);
  CHECK(v.tail_estimate < 1e-8);
}

TEST_CASE("negative-integer a terminates the series exactly") {
  // F_D(-1, b, c; x) = 1 - sum (b_i/c) x_i
  Params<Rational> p{Rational(-1), {Rational(2, 5), Rational(1, 3)},
                     Rational(7, 2)};
  XPoint<Rational> x({Rational(1, 2), Rational(1, 3)});
  Truncation t;
  auto v = fd_series(p, x, t);
  CHECK(v.finite);
  Rational expect = 1 - (p.b[0] / p.c) * x.x[0] - (p.b[1] / p.c) * x.x[1];
  CHECK(v.value == expect);
}

TEST_CASE("exact series matches a direct double sum") {
  Params<Rational> p{Rational(-2), {Rational(-1), Rational(-3)}, Rational(9, 2)};
  XPoint<Rational> x({Rational(1, 2), Rational(1, 3)});
  Truncation t;
  auto v = fd_series(p, x, t);
  Rational direct(0);
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      Rational term = pochhammer(p.a, n1 + n2) * pochhammer(p.b[0], n1) *
                      pochhammer(p.b[1], n2) /
                      (pochhammer(p.c, n1 + n2) * factorial(n1) *
                       factorial(n2));
      direct += term * ipow(x.x[0], n1) * ipow(x.x[1], n2);
    }
  CHECK(v.value == direct);
}

TEST_CASE("series rejects out-of-domain points") {
  Params<Complex> p{Complex(0.3), {Complex(0.2)}, Complex(1.5)};
  Truncation t;
  CHECK_THROWS_AS(fd_series(p, XPoint<Complex>({Complex(1.5)}), t),
                  domain_error);
}

TEST_CASE("laurent companion: exponent bijection round trip") {
  const int m = 3;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 8);
  for (int k = 1; k <= m; ++k)
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> n{d(rng), d(rng), d(rng)};
      auto v = detail::fk_monomial_exponents(m, k, n);
      auto back = detail::index_of_exponent(m, k, v);
      CHECK(back == n);
    }
}

TEST_CASE("laurent companion: integer mode finite and exact") {
  // admissible pattern: a, c integers, b integers, c - a >= 1, b_l <= 0
  Params<Rational> p{Rational(-3), {Rational(-1), Rational(-2)}, Rational(0)};
  XPoint<Rational> x({Rational(1, 2), Rational(1, 3)});
  auto e = fk_eval_exact(p, x, 1);
  CHECK(e.finite);
  // oracle: sum the defining Laurent series directly over the finite box
  Rational direct(0);
  for (std::int64_t n1 = 0; n1 <= 2; ++n1)  // n_1 <= c - a - 1 = 2
    for (std::int64_t n2 = 0; n2 <= 2; ++n2) {  // n_2 <= -b_2 = 2
      std::vector<std::int64_t> n{n1, n2};
      Rational cn = detail::fk_coeff_ratio(p, 1, n);
      auto ex = detail::fk_monomial_exponents(2, 1, n);
      direct += cn * ipow(x.x[0], ex[0]) * ipow(x.x[1], ex[1]);
    }
  auto mu = fk_prefactor_exponents(p, 1);
  Rational pref = ipow(x.x[0], to_int(mu[0])) * ipow(x.x[1], to_int(mu[1]));
  // fk_eval_exact folds in the exact overall Gamma normalization; the ratio
  // to the raw sum must be that constant, so cross-check through a second
  // point instead of reproducing it here.
  XPoint<Rational> x2({Rational(1, 5), Rational(1, 7)});
  auto e2 = fk_eval_exact(p, x2, 1);
  Rational direct2(0);
  for (std::int64_t n1 = 0; n1 <= 2; ++n1)
    for (std::int64_t n2 = 0; n2 <= 2; ++n2) {
      std::vector<std::int64_t> n{n1, n2};
      Rational cn = detail::fk_coeff_ratio(p, 1, n);
      auto ex = detail::fk_monomial_exponents(2, 1, n);
      direct2 += cn * ipow(x2.x[0], ex[0]) * ipow(x2.x[1], ex[1]);
    }
  Rational pref2 = ipow(x2.x[0], to_int(mu[0])) * ipow(x2.x[1], to_int(mu[1]));
  CHECK(e.value * pref2 * direct2 == e2.value * pref * direct);
}

TEST_CASE("float laurent companion enforces its convergence pattern") {
  Params<Complex> p{Complex(0.31), {Complex(0.27), Complex(0.41)}, Complex(1.63)};
  Truncation t;
  CHECK_THROWS_AS(
      fk_eval_float(p, XPoint<Complex>({Complex(0.2), Complex(0.15)}), 1, t),
      domain_error);
  auto ok = fk_eval_float(p, XPoint<Complex>({Complex(0.2), Complex(0.05)}), 1, t);
  CHECK(std::isfinite(std::abs(ok.value)));
}

TEST_CASE("truncated series are annihilated by the system operators") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(1, 9), den(2, 9);
  auto rr = [&] { return Rational(num(rng)) / Rational(den(rng)); };
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> b(m);
      for (auto& bi : b) bi = rr() + Rational(1, 101);
      Params<Rational> p{rr(), b, rr() + Rational(3) + Rational(1, 103)};
      for (int k = 0; k <= m; ++k) {
        auto rep = ed_annihilation(p, k, 6);
        INFO("m=", m, " k=", k, " failure at ", rep.first_failure);
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
      }
    }
}

TEST_CASE("integer-mode laurent companion is annihilated with no window") {
  Params<Rational> p{Rational(-3), {Rational(-1), Rational(-2)}, Rational(0)};
  auto rep = ed_annihilation(p, 1, 8);
  CHECK(rep.ok());
  CHECK(rep.skipped == 0);
}

TEST_CASE("theta entries match finite differences") {
  Params<Complex> p{Complex(0.31), {Complex(0.27), Complex(0.41)}, Complex(1.63)};
  XPoint<Complex> x({Complex(0.2), Complex(0.15)});
  Truncation t;
  t.order = 50;
  auto e = fd_eval(p, x, t);
  double h = 1e-6;
  for (int i = 0; i < 2; ++i) {
    auto xp = x.x, xm = x.x;
    xp[i] += h;
    xm[i] -= h;
    auto vp = fd_eval(p, XPoint<Complex>(xp), t).value;
    auto vm = fd_eval(p, XPoint<Complex>(xm), t).value;
    Complex fd = x.x[i] * (vp - vm) / (2.0 * h);
    CHECK(std::abs(e.theta[i] - fd) < 1e-7);
  }
}
