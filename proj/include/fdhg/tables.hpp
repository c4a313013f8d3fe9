#pragma once

#include <cstdint>
#include <vector>

#include "fdhg/contiguity.hpp"

namespace fdhg {

// Row sums (beta_1, beta_2) and column sums (gamma_0..gamma_m), all
// strictly positive, with beta_1 + beta_2 = sum gamma_i.
struct Marginals {
  std::int64_t beta1, beta2;
  std::vector<std::int64_t> gamma;

  Marginals(std::int64_t b1, std::int64_t b2, std::vector<std::int64_t> g)
      : beta1(b1), beta2(b2), gamma(std::move(g)) {
    if (beta1 <= 0 || beta2 <= 0) throw domain_error("marginals: beta_i <= 0");
    std::int64_t s = 0;
    for (auto gi : gamma) {
      if (gi <= 0) throw domain_error("marginals: gamma_j <= 0");
      s += gi;
    }
    if (gamma.size() < 2) throw domain_error("marginals: need m >= 1");
    if (s != beta1 + beta2)
      throw domain_error("marginals: beta_1 + beta_2 != sum gamma_j");
  }

  int m() const { return static_cast<int>(gamma.size()) - 1; }
  std::int64_t t() const { return beta1 + beta2; }
};

// 2 x (m+1) integer table; u_0 may carry a negative entry when used as a
// monomial exponent outside B_0.
struct Table {
  std::vector<std::int64_t> row1, row2;
};

// Positive 2 x (m+1) cell-probability matrix.
template <class S>
struct PMatrix {
  std::vector<S> row1, row2;

  int m() const { return static_cast<int>(row1.size()) - 1; }
};

// Index k of the class B_k containing (beta, gamma): k = 0 when
// beta_1 <= gamma_0, otherwise the unique k with
// beta_1 - sum_{i<k} gamma_i > 0 >= beta_1 - sum_{i<=k} gamma_i.
inline int classify(const Marginals& mg) {
  std::int64_t part = 0;
  for (int k = 0; k <= mg.m(); ++k) {
    part += mg.gamma[k];
    if (mg.beta1 - part <= 0) return k;
  }
  throw domain_error("classify: marginals outside every B_k");
}

// The distinguished tables u_0 and u_k.
inline Table u_table(const Marginals& mg, int k) {
  const int m = mg.m();
  Table u;
  u.row1.assign(m + 1, 0);
  u.row2.assign(m + 1, 0);
  if (k == 0) {
    u.row1[0] = mg.beta1;
    u.row2[0] = mg.gamma[0] - mg.beta1;
    for (int j = 1; j <= m; ++j) u.row2[j] = mg.gamma[j];
  } else {
    std::int64_t part = 0;
    for (int j = 0; j < k; ++j) {
      u.row1[j] = mg.gamma[j];
      part += mg.gamma[j];
    }
    u.row1[k] = mg.beta1 - part;
    u.row2[k] = part + mg.gamma[k] - mg.beta1;
    for (int j = k + 1; j <= m; ++j) u.row2[j] = mg.gamma[j];
  }
  return u;
}

// x_i = p_{1i} p_{20} / (p_{10} p_{2i})
template <class S>
XPoint<S> x_from_p(const PMatrix<S>& p) {
  const int m = p.m();
  std::vector<S> x(m);
  for (int i = 1; i <= m; ++i)
    x[i - 1] = p.row1[i] * p.row2[0] / (p.row1[0] * p.row2[i]);
  return XPoint<S>(std::move(x));  // throws on degenerate configurations
}

// Z(beta,gamma;p) = t! sum_u p^u / u! over all tables with the given
// margins, enumerated column by column.
inline Rational z_bruteforce(const Marginals& mg, const PMatrix<Rational>& p,
                             std::int64_t t_bound = 30) {
  if (mg.t() > t_bound) throw domain_error("z_bruteforce: t exceeds bound");
  const int m = mg.m();
  Rational total(0);
  std::vector<std::int64_t> u1(m + 1, 0);
  // suffix sums of gamma for pruning
  std::vector<std::int64_t> suffix(m + 2, 0);
  for (int j = m; j >= 0; --j) suffix[j] = suffix[j + 1] + mg.gamma[j];
  auto rec = [&](auto&& self, int j, std::int64_t rem) -> void {
    if (j == m) {
      if (rem < 0 || rem > mg.gamma[m]) return;
      u1[m] = rem;
      Rational term = factorial(mg.t());
      for (int jj = 0; jj <= m; ++jj) {
        std::int64_t u2 = mg.gamma[jj] - u1[jj];
        term *= ipow(p.row1[jj], u1[jj]) * ipow(p.row2[jj], u2);
        term /= factorial(u1[jj]) * factorial(u2);
      }
      total += term;
      return;
    }
    std::int64_t lo = std::max<std::int64_t>(0, rem - suffix[j + 1]);
    std::int64_t hi = std::min(mg.gamma[j], rem);
    for (std::int64_t v = lo; v <= hi; ++v) {
      u1[j] = v;
      self(self, j + 1, rem - v);
    }
  };
  rec(rec, 0, mg.beta1);
  return total;
}

// Integer parameter point of the series representation of Z:
// (a, b, c) = (-beta_1, (-gamma_1..-gamma_m), gamma_0 - beta_1 + 1).
inline Params<Rational> z_series_params(const Marginals& mg) {
  Params<Rational> p;
  p.a = Rational(-mg.beta1);
  for (int i = 1; i <= mg.m(); ++i) p.b.push_back(Rational(-mg.gamma[i]));
  p.c = Rational(mg.gamma[0] - mg.beta1 + 1);
  return p;
}

// p^{u_0} with u_0's possibly negative (2,0) entry.
inline Rational p_power_u0(const Marginals& mg, const PMatrix<Rational>& p) {
  Rational r = ipow(p.row1[0], mg.beta1) *
               ipow(p.row2[0], mg.gamma[0] - mg.beta1);
  for (int j = 1; j <= mg.m(); ++j) r *= ipow(p.row2[j], mg.gamma[j]);
  return r;
}

// Plan the contiguity walk of the difference holonomic gradient method:
// B_0 targets descend in a from the closed-form seed at a = -1; B_k
// targets descend diagonally in (a, c) from the window boundary
// beta_1 = sum_{i<k} gamma_i + 1, where the Laurent sum is smallest.
inline ParamPath<Rational> plan_path(const Marginals& mg, int k) {
  ParamPath<Rational> path;
  if (k == 0) {
    path.start = z_series_params(mg);
    path.start.a = Rational(-1);
    for (std::int64_t s = 1; s < mg.beta1; ++s)
      path.steps.push_back({Step::A_DOWN, 0});
  } else {
    std::int64_t boundary = 1;
    for (int i = 0; i < k; ++i) boundary += mg.gamma[i];
    path.start = z_series_params(mg);
    path.start.a = Rational(-boundary);
    path.start.c = Rational(mg.gamma[0] - boundary + 1);
    for (std::int64_t s = boundary; s < mg.beta1; ++s)
      path.steps.push_back({Step::AC_DIAG, 0});
  }
  return path;
}

// Exact seed for the B_k ladder: the finite f^{(k)} vector at the window
// boundary.
inline Vec<Rational> seed_vector_bk(const Marginals& mg, int k,
                                    const XPoint<Rational>& x) {
  auto path = plan_path(mg, k);
  return assemble_f_vector(path.start, x, fk_eval_exact(path.start, x, k));
}

struct ZResult {
  Rational z;
  int k_class = 0;
  std::vector<StepRecord> steps;
};

// Z via the series representation and the contiguity walk (exact).
inline ZResult z_hgm(const Marginals& mg, const PMatrix<Rational>& p) {
  ZResult res;
  res.k_class = classify(mg);
  XPoint<Rational> x = x_from_p(p);
  auto path = plan_path(mg, res.k_class);
  Rational value;
  if (res.k_class == 0) {
    Vec<Rational> seed = seed_vector_b0(path.start, x);
    Vec<Rational> f = walk(path, seed, x, Variant::F, &res.steps);
    Table u0 = u_table(mg, 0);
    Rational u0fact(1);
    for (int j = 0; j <= mg.m(); ++j)
      u0fact *= factorial(u0.row1[j]) * factorial(u0.row2[j]);
    value = factorial(mg.t()) / u0fact * p_power_u0(mg, p) * f[0];
  } else {
    Vec<Rational> seed = seed_vector_bk(mg, res.k_class, x);
    Vec<Rational> f = walk(path, seed, x, Variant::Fk, &res.steps);
    value = factorial(mg.t()) * p_power_u0(mg, p) * f[0];
  }
  res.z = value;
  return res;
}

}  // namespace fdhg
