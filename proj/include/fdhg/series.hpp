#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "fdhg/gammafn.hpp"
#include "fdhg/linalg.hpp"
#include "fdhg/params.hpp"

namespace fdhg {

// Truncation box: each summation index ranges over 0..order. rho bounds the
// geometric ratios of the admissible |x| patterns in float mode.
struct Truncation {
  int order = 40;
  double rho = 0.5;
};

template <class S>
struct SeriesValue {
  S value;
  double tail_estimate = 0.0;
  bool finite = false;
};

namespace detail {

// Iterate over all multi-indices n in prod [0, caps[l]] with an optional
// cap on sum(n); fn(n, total) is called in lexicographic order.
inline void for_each_index(
    const std::vector<std::int64_t>& caps, std::int64_t total_cap,
    const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>&
        fn) {
  const int m = static_cast<int>(caps.size());
  std::vector<std::int64_t> n(m, 0);
  std::int64_t total = 0;
  while (true) {
    if (total_cap < 0 || total <= total_cap) fn(n, total);
    int i = m - 1;
    for (; i >= 0; --i) {
      if (n[i] < caps[i]) {
        ++n[i];
        ++total;
        break;
      }
      total -= n[i];
      n[i] = 0;
    }
    if (i < 0) break;
  }
}

// Per-index cap forced by a Pochhammer factor (b,n): once b is a
// nonpositive integer, terms with n > -b vanish.
inline std::int64_t forced_cap(const Rational& b, std::int64_t fallback) {
  if (is_integer(b) && b <= 0) return std::min(fallback, -to_int(b));
  return fallback;
}
inline std::int64_t forced_cap(const Complex&, std::int64_t fallback) {
  return fallback;
}

inline std::int64_t forced_total_cap(const Rational& a) {
  if (is_integer(a) && a <= 0) return -to_int(a);
  return -1;
}
inline std::int64_t forced_total_cap(const Complex&) { return -1; }

}  // namespace detail

// Evaluation of the F_D series over the truncation box, together with the
// theta_i = x_i d/dx_i sums needed for the derivative entries of F.
template <class S>
struct SeriesEval {
  S value;
  std::vector<S> theta;  // theta[i-1] = theta_i applied to the sum
  bool finite = false;
  double tail_estimate = 0.0;
};

template <class S>
SeriesEval<S> fd_eval(const Params<S>& p, const XPoint<S>& x,
                      const Truncation& t) {
  const int m = p.m();
  std::int64_t total_cap = detail::forced_total_cap(p.a);
  bool finite = total_cap >= 0;
  std::vector<std::int64_t> caps(m);
  for (int l = 0; l < m; ++l) {
    caps[l] = detail::forced_cap(p.b[l], finite ? total_cap : t.order);
    if (finite && total_cap >= 0) caps[l] = std::min(caps[l], total_cap);
  }
  if (!finite) {
    double mx = 0.0;
    for (int l = 0; l < m; ++l)
      mx = std::max(mx, scalar_traits<S>::magnitude(x.x[l]));
    if (mx >= 1.0)
      throw domain_error("fd_eval: |x_i| >= 1 outside convergence domain");
  }
  std::int64_t cap_sum = 0;
  for (auto c : caps) cap_sum += c;
  std::int64_t top = finite ? std::min(total_cap, cap_sum) : cap_sum;

  // coefficient tables
  std::vector<S> poch_a(top + 1), poch_c(top + 1);
  poch_a[0] = S(1);
  poch_c[0] = S(1);
  for (std::int64_t j = 1; j <= top; ++j) {
    poch_a[j] = poch_a[j - 1] * (p.a + S(j - 1));
    poch_c[j] = poch_c[j - 1] * (p.c + S(j - 1));
    if (scalar_traits<S>::is_zero(poch_c[j]))
      throw domain_error("fd_eval: pole of (c,n), c a nonpositive integer");
  }
  std::vector<std::vector<S>> coef(m), xpow(m);
  for (int l = 0; l < m; ++l) {
    coef[l].resize(caps[l] + 1);
    xpow[l].resize(caps[l] + 1);
    coef[l][0] = S(1);
    xpow[l][0] = S(1);
    for (std::int64_t n = 1; n <= caps[l]; ++n) {
      coef[l][n] = coef[l][n - 1] * (p.b[l] + S(n - 1)) / S(n);
      xpow[l][n] = xpow[l][n - 1] * x.x[l];
    }
  }

  SeriesEval<S> out;
  out.value = S(0);
  out.theta.assign(m, S(0));
  out.finite = finite;
  double abs_sum = 0.0;
  detail::for_each_index(
      caps, finite ? total_cap : -1,
      [&](const std::vector<std::int64_t>& n, std::int64_t total) {
        S term = poch_a[total] / poch_c[total];
        for (int l = 0; l < m; ++l) term *= coef[l][n[l]] * xpow[l][n[l]];
        out.value += term;
        for (int l = 0; l < m; ++l)
          if (n[l] > 0) out.theta[l] += S(n[l]) * term;
        if constexpr (!scalar_traits<S>::is_exact)
          abs_sum += scalar_traits<S>::magnitude(term);
      });
  if (!finite) {
    double r = std::min(t.rho, 0.999);
    out.tail_estimate = abs_sum * std::pow(r, t.order + 1) / (1.0 - r);
  }
  return out;
}

template <class S>
SeriesValue<S> fd_series(const Params<S>& p, const XPoint<S>& x,
                         const Truncation& t) {
  auto e = fd_eval(p, x, t);
  return {e.value, e.tail_estimate, e.finite};
}

// ---------------------------------------------------------------------------
// Laurent solutions f^{(k)}.

namespace detail {

// Relative coefficient Gamma^{(k)}_0 / Gamma^{(k)}_n, a rational function
// of the parameters; valid for generic parameters.
template <class S>
S fk_coeff_ratio(const Params<S>& p, int k,
                 const std::vector<std::int64_t>& n) {
  const int m = p.m();
  std::int64_t s_le = 0, s_gt = 0;
  for (int l = 1; l <= k; ++l) s_le += n[l - 1];
  for (int l = k + 1; l <= m; ++l) s_gt += n[l - 1];
  S r = gamma_ratio(p.c - p.a, -n[k - 1]);
  for (int l = 1; l <= m; ++l) {
    if (l != k) r *= gamma_ratio(S(1) - p.b[l - 1], -n[l - 1]);
    r *= gamma_ratio(S(1), n[l - 1]);
  }
  S sum_bk(0), sum_bkm1(0);
  for (int l = 1; l <= k; ++l) sum_bk += p.b[l - 1];
  for (int l = 1; l < k; ++l) sum_bkm1 += p.b[l - 1];
  r *= gamma_ratio(-sum_bk + p.c, -s_le + s_gt);
  r *= gamma_ratio(S(2) + sum_bkm1 - p.c, s_le - s_gt);
  return r;
}

// Exponent vector of the Laurent monomial belonging to summation index n:
// x_l^{-n_l} (l<k), x_k^{n_k + sum_{l<k} n_l - sum_{l>k} n_l}, x_l^{n_l}
// (l>k).
inline std::vector<std::int64_t> fk_monomial_exponents(
    int m, int k, const std::vector<std::int64_t>& n) {
  std::vector<std::int64_t> e(m, 0);
  std::int64_t s_lt = 0, s_gt = 0;
  for (int l = 1; l < k; ++l) {
    e[l - 1] = -n[l - 1];
    s_lt += n[l - 1];
  }
  for (int l = k + 1; l <= m; ++l) {
    e[l - 1] = n[l - 1];
    s_gt += n[l - 1];
  }
  e[k - 1] = n[k - 1] + s_lt - s_gt;
  return e;
}

}  // namespace detail

// Prefactor exponents mu of f^{(k)}: mu_l = -b_l (l<k),
// mu_k = sum_{l<k} b_l - c + 1, mu_l = 0 (l>k).
template <class S>
std::vector<S> fk_prefactor_exponents(const Params<S>& p, int k) {
  const int m = p.m();
  std::vector<S> mu(m, S(0));
  S sb(0);
  for (int l = 1; l < k; ++l) {
    mu[l - 1] = -p.b[l - 1];
    sb += p.b[l - 1];
  }
  mu[k - 1] = sb - p.c + S(1);
  return mu;
}

// Exact evaluation of f^{(k)} in integer mode: a, b_l, c integers with
// c - a > 0 and -b_l > 0; the reciprocal-Gamma coefficients force
// n_k <= c-a-1 and n_l <= -b_l, so the sum is finite.
inline SeriesEval<Rational> fk_eval_exact(const Params<Rational>& p,
                                          const XPoint<Rational>& x, int k) {
  const int m = p.m();
  if (k < 1 || k > m) throw domain_error("fk_eval_exact: k out of range");
  for (const auto& bl : p.b)
    if (!is_integer(bl)) throw domain_error("fk_eval_exact: b not integral");
  if (!is_integer(p.a) || !is_integer(p.c))
    throw domain_error("fk_eval_exact: a, c not integral");
  std::int64_t nk_max = to_int(p.c - p.a) - 1;
  if (nk_max < 0) throw domain_error("fk_eval_exact: c - a <= 0");
  std::vector<std::int64_t> caps(m);
  for (int l = 1; l <= m; ++l) {
    if (l == k) {
      caps[l - 1] = nk_max;
    } else {
      std::int64_t cap = -to_int(p.b[l - 1]);
      if (cap < 0) throw domain_error("fk_eval_exact: b_l > 0");
      caps[l - 1] = cap;
    }
  }
  Rational sum_bk(0), sum_bkm1(0);
  for (int l = 1; l <= k; ++l) sum_bk += p.b[l - 1];
  for (int l = 1; l < k; ++l) sum_bkm1 += p.b[l - 1];

  auto mu = fk_prefactor_exponents(p, k);
  Rational pref(1);
  for (int l = 0; l < m; ++l)
    if (mu[l] != 0) pref *= ipow(x.x[l], to_int(mu[l]));

  SeriesEval<Rational> out;
  out.value = Rational(0);
  out.theta.assign(m, Rational(0));
  out.finite = true;
  detail::for_each_index(
      caps, -1, [&](const std::vector<std::int64_t>& n, std::int64_t) {
        std::int64_t s_le = 0, s_gt = 0;
        for (int l = 1; l <= k; ++l) s_le += n[l - 1];
        for (int l = k + 1; l <= m; ++l) s_gt += n[l - 1];
        Rational g = rgamma_int(to_int(p.c - p.a) - n[k - 1]);
        for (int l = 1; l <= m; ++l) {
          if (l != k)
            g *= rgamma_int(1 - to_int(p.b[l - 1]) - n[l - 1]);
          g *= rgamma_int(1 + n[l - 1]);
        }
        g *= rgamma_int(to_int(-sum_bk + p.c) - s_le + s_gt);
        g *= rgamma_int(to_int(Rational(2) + sum_bkm1 - p.c) + s_le - s_gt);
        if (g == 0) return;
        auto e = detail::fk_monomial_exponents(m, k, n);
        Rational mono(1);
        for (int l = 0; l < m; ++l)
          if (e[l] != 0) mono *= ipow(x.x[l], e[l]);
        Rational term = g * mono;
        out.value += term;
        for (int l = 0; l < m; ++l)
          out.theta[l] += Rational(e[l] + to_int(mu[l])) * term;
      });
  out.value *= pref;
  for (int l = 0; l < m; ++l) out.theta[l] *= pref;
  return out;
}

// Float-mode f^{(k)}: relative coefficients are exact rational functions of
// the parameters; a single Gamma^{(k)}_0 evaluation restores the absolute
// normalization. Powers of the possibly-negative x coordinates use
// pow_branch (arg in (-pi, pi], negative reals at -pi).
inline SeriesEval<Complex> fk_eval_float(const Params<Complex>& p,
                                         const XPoint<Complex>& x, int k,
                                         const Truncation& t) {
  const int m = p.m();
  if (k < 1 || k > m) throw domain_error("fk_eval_float: k out of range");
  // convergence pattern of the Laurent domain
  double axk = std::abs(x.x[k - 1]);
  for (int l = 1; l < k; ++l)
    if (std::abs(x.x[k - 1] / x.x[l - 1]) > t.rho)
      throw domain_error("fk_eval_float: |x_k/x_l| > rho for l < k");
  if (axk > t.rho) throw domain_error("fk_eval_float: |x_k| > rho");
  for (int l = k + 1; l <= m; ++l)
    if (std::abs(x.x[l - 1] / x.x[k - 1]) > t.rho)
      throw domain_error("fk_eval_float: |x_l/x_k| > rho for l > k");

  Complex sum_bk(0), sum_bkm1(0);
  for (int l = 1; l <= k; ++l) sum_bk += p.b[l - 1];
  for (int l = 1; l < k; ++l) sum_bkm1 += p.b[l - 1];
  Complex g0 = gamma_complex(p.c - p.a);
  for (int l = 1; l <= m; ++l)
    if (l != k) g0 *= gamma_complex(Complex(1) - p.b[l - 1]);
  g0 *= gamma_complex(-sum_bk + p.c);
  g0 *= gamma_complex(Complex(2) + sum_bkm1 - p.c);
  Complex inv_g0 = Complex(1) / g0;

  auto mu = fk_prefactor_exponents(p, k);
  Complex pref(1);
  for (int l = 0; l < m; ++l)
    if (mu[l] != Complex(0)) pref *= pow_branch(x.x[l], mu[l]);

  std::vector<std::int64_t> caps(m, t.order);
  SeriesEval<Complex> out;
  out.value = Complex(0);
  out.theta.assign(m, Complex(0));
  double abs_sum = 0.0;
  detail::for_each_index(
      caps, -1, [&](const std::vector<std::int64_t>& n, std::int64_t) {
        Complex cn = detail::fk_coeff_ratio(p, k, n) * inv_g0;
        auto e = detail::fk_monomial_exponents(m, k, n);
        Complex mono(1);
        for (int l = 0; l < m; ++l)
          if (e[l] != 0) mono *= ipow(x.x[l], e[l]);
        Complex term = cn * mono;
        out.value += term;
        for (int l = 0; l < m; ++l)
          out.theta[l] += (static_cast<double>(e[l]) + mu[l]) * term;
        abs_sum += std::abs(term);
      });
  out.value *= pref;
  for (int l = 0; l < m; ++l) out.theta[l] *= pref;
  double r = std::min(t.rho, 0.999);
  out.tail_estimate =
      std::abs(pref) * abs_sum * std::pow(r, t.order + 1) / (1.0 - r);
  return out;
}

inline SeriesValue<Rational> fk_series(const Params<Rational>& p,
                                       const XPoint<Rational>& x, int k,
                                       const Truncation&) {
  auto e = fk_eval_exact(p, x, k);
  return {e.value, 0.0, true};
}

inline SeriesValue<Complex> fk_series(const Params<Complex>& p,
                                      const XPoint<Complex>& x, int k,
                                      const Truncation& t) {
  auto e = fk_eval_float(p, x, k, t);
  return {e.value, e.tail_estimate, false};
}

// ---------------------------------------------------------------------------
// The (m+1)-vectors F and F^{(k)}: entry 0 is the series value, entry i is
// ((x_i - 1)/alpha_i) d/dx_i of it, with alpha_i = -b_i.

enum class SeriesKind { FD, FK };

template <class S>
Vec<S> assemble_f_vector(const Params<S>& p, const XPoint<S>& x,
                         const SeriesEval<S>& e) {
  const int m = p.m();
  Vec<S> v(m + 1);
  v[0] = e.value;
  for (int i = 1; i <= m; ++i) {
    if (scalar_traits<S>::is_zero(p.b[i - 1]))
      throw domain_error("f_vector: alpha_i = -b_i = 0");
    // d/dx_i = theta_i / x_i
    v[i] = (x.x[i - 1] - S(1)) / (-p.b[i - 1]) * e.theta[i - 1] / x.x[i - 1];
  }
  return v;
}

template <class S>
Vec<S> f_vector(const Params<S>& p, const XPoint<S>& x, const Truncation& t,
                SeriesKind kind, int k = 0) {
  if (kind == SeriesKind::FD) return assemble_f_vector(p, x, fd_eval(p, x, t));
  if constexpr (scalar_traits<S>::is_exact)
    return assemble_f_vector(p, x, fk_eval_exact(p, x, k));
  else
    return assemble_f_vector(p, x, fk_eval_float(p, x, k, t));
}

// Independent single-variable oracle: Gauss 2F1 partial sum, used to
// cross-check the m = 1 specialization of fd_series.
inline double gauss_2f1(double a, double b, double c, double x, int order) {
  double sum = 0.0, term = 1.0;
  for (int n = 0;; ++n) {
    sum += term;
    if (n == order) break;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
  }
  return sum;
}

}  // namespace fdhg
