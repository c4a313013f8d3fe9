#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdhg/tables.hpp"

using namespace fdhg;

TEST_CASE("marginal validation") {
  CHECK_THROWS_AS(Marginals(0, 1, {1}), domain_error);
  CHECK_THROWS_AS(Marginals(1, 1, {1, 2}), domain_error);
  CHECK_THROWS_AS(Marginals(2, 2, {4}), domain_error);
  Marginals mg(3, 2, {2, 1, 2});
  CHECK(mg.m() == 2);
  CHECK(mg.t() == 5);
}

TEST_CASE("class index from partial column sums") {
  CHECK(classify(Marginals(1, 1, {1, 1})) == 0);
  CHECK(classify(Marginals(2, 3, {2, 1, 2})) == 0);
  CHECK(classify(Marginals(3, 2, {2, 1, 2})) == 1);
  CHECK(classify(Marginals(5, 1, {2, 1, 3})) == 2);
  CHECK(classify(Marginals(4, 2, {2, 1, 3})) == 2);
}

TEST_CASE("representative table for the class") {
  Marginals mg(3, 2, {2, 1, 2});
  auto u1 = u_table(mg, 1);
  CHECK(u1.row1 == std::vector<std::int64_t>{2, 1, 0});
  CHECK(u1.row2 == std::vector<std::int64_t>{0, 0, 2});
  auto u0 = u_table(Marginals(2, 3, {2, 1, 2}), 0);
  CHECK(u0.row1 == std::vector<std::int64_t>{2, 0, 0});
  CHECK(u0.row2 == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("coordinates from cell parameters") {
  PMatrix<Rational> p;
  p.row1 = {Rational(1), Rational(2)};
  p.row2 = {Rational(3), Rational(4)};
  XPoint<Rational> x = x_from_p(p);
  // x_i = p_1i p_20 / (p_10 p_2i)
  CHECK(x.x[0] == Rational(2) * Rational(3) / (Rational(1) * Rational(4)));
}

TEST_CASE("two-by-two worked example") {
  Marginals mg(1, 1, {1, 1});
  PMatrix<Rational> p;
  p.row1 = {Rational(1), Rational(2)};
  p.row2 = {Rational(3), Rational(4)};
  // t! sum over tables of p^u/u!: tables (1,0|0,1) and (0,1|1,0)
  CHECK(z_bruteforce(mg, p) == Rational(20));
  auto r = z_hgm(mg, p);
  CHECK(r.z == Rational(20));
  CHECK(r.k_class == 0);
}

TEST_CASE("enumeration oracle on a known small sum") {
  // beta = (2,1), gamma = (1,1,1): tables are 0/1 rows summing to 2 and 1
  Marginals mg(2, 1, {1, 1, 1});
  PMatrix<Rational> p;
  p.row1 = {Rational(1), Rational(1), Rational(1)};
  p.row2 = {Rational(1), Rational(1), Rational(1)};
  // Z = t! * (#tables) since all p = 1 and every u! = 1; 3 tables
  CHECK(z_bruteforce(mg, p) == Rational(18));
}

TEST_CASE("walk plans stay in the valid parameter strip") {
  for (auto mg : {Marginals(1, 1, {1, 1}), Marginals(3, 2, {2, 1, 2}),
                  Marginals(5, 1, {2, 1, 3}), Marginals(2, 4, {3, 1, 2})}) {
    int k = classify(mg);
    auto path = plan_path(mg, k);
    auto target = path.target();
    // the walk must land on the series-representation parameters
    auto want = z_series_params(mg);
    CHECK(target.a == want.a);
    CHECK(target.c == want.c);
    for (int i = 0; i < target.m(); ++i) CHECK(target.b[i] == want.b[i]);
  }
}

TEST_CASE("randomized oracle agreement across classes") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9);
  auto rr = [&] { return Rational(num(rng)) / Rational(den(rng)); };
  std::vector<Marginals> margs = {
      Marginals(1, 1, {1, 1}),       Marginals(4, 1, {2, 3}),
      Marginals(1, 4, {2, 3}),       Marginals(3, 2, {2, 1, 2}),
      Marginals(5, 1, {2, 1, 3}),    Marginals(2, 4, {3, 1, 2}),
      Marginals(6, 2, {2, 2, 2, 2}), Marginals(3, 5, {1, 3, 2, 2})};
  for (const auto& mg : margs)
    for (int trial = 0; trial < 3; ++trial) {
      PMatrix<Rational> p;
      p.row1.resize(mg.gamma.size());
      p.row2.resize(mg.gamma.size());
      for (auto* row : {&p.row1, &p.row2})
        for (auto& e : *row) e = rr();
      CAPTURE(mg.beta1);
      CAPTURE(mg.beta2);
      CHECK(z_hgm(mg, p).z == z_bruteforce(mg, p));
    }
}
