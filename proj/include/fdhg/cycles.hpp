#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "fdhg/gammafn.hpp"
#include "fdhg/params.hpp"
#include "fdhg/series.hpp"

namespace fdhg {

namespace quad {

// Gauss-Legendre nodes/weights on [-1, 1], by Newton iteration on P_n.
struct GaussLegendre {
  std::vector<double> node, weight;

  explicit GaussLegendre(int n) {
    node.resize(n);
    weight.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
  }
};

// tanh-sinh quadrature on (0,1) for integrands with integrable endpoint
// singularities. The integrand receives both s and 1-s so it can keep full
// accuracy near either endpoint.
inline double tanh_sinh_01(
    const std::function<double(double, double)>& f, int levels = 10) {
  const double tmax = 6.5;
  double sum = 0.0;
  auto add_point = [&](double t, double w) {
    double u = std::numbers::pi / 2.0 * std::sinh(t);
    double cu = std::cosh(u);
    double s = 0.5 * std::exp(u) / cu;            // = (1+tanh u)/2
    double one_minus_s = 0.5 * std::exp(-u) / cu;  // = (1-tanh u)/2
    double jac = std::numbers::pi / 4.0 * std::cosh(t) / (cu * cu);
    if (jac < 1e-320 || s <= 0.0 || one_minus_s <= 0.0) return;
    sum += w * jac * f(s, one_minus_s);
  };
  // level 0: trapezoid with step 1 over the whole lattice
  add_point(0.0, 1.0);
  for (double t = 1.0; t <= tmax; t += 1.0) {
    add_point(t, 1.0);
    add_point(-t, 1.0);
  }
  double h = 1.0;
  double prev = sum;
  for (int lev = 1; lev <= levels; ++lev) {
    h /= 2.0;
    // halving the step: new = old/2 + h * (f at odd multiples of h)
    for (double t = h; t <= tmax; t += 2.0 * h) {
      add_point(t, 2.0 * h);
      add_point(-t, 2.0 * h);
    }
    sum *= 0.5;
    if (lev >= 4 && std::abs(sum - prev) <= 1e-15 * std::abs(sum)) {
      return sum;
    }
    prev = sum;
  }
  return sum;
}

}  // namespace quad

// F_D by its Euler integral, substituted onto (0,1):
//   F_D = Gamma(c)/(Gamma(a)Gamma(c-a)) *
//         int_0^1 s^{a-1} (1-s)^{c-a-1} prod (1 - x_i s)^{-b_i} ds
// Real parameters with Re a > 0, Re(c-a) > 0; real 0 < x_i < 1.
inline double euler_integral_fd(const Params<Complex>& p,
                                const XPoint<Complex>& x) {
  double a = p.a.real(), c = p.c.real();
  if (p.a.imag() != 0.0 || p.c.imag() != 0.0)
    throw domain_error("euler_integral_fd: real parameters required");
  if (a <= 0.0 || c - a <= 0.0)
    throw domain_error("euler_integral_fd: need a > 0 and c - a > 0");
  const int m = p.m();
  std::vector<double> b(m), xv(m);
  for (int i = 0; i < m; ++i) {
    b[i] = p.b[i].real();
    xv[i] = x.x[i].real();
    if (p.b[i].imag() != 0.0 || x.x[i].imag() != 0.0 || xv[i] <= 0.0 ||
        xv[i] >= 1.0)
      throw domain_error("euler_integral_fd: need real 0 < x_i < 1");
  }
  double integral = quad::tanh_sinh_01(
      [&](double s, double oms) {
        double v = std::pow(s, a - 1.0) * std::pow(oms, c - a - 1.0);
        for (int i = 0; i < m; ++i) v *= std::pow(1.0 - xv[i] * s, -b[i]);
        return v;
      },
      11);
  double gamma_factor = std::tgamma(c) / (std::tgamma(a) * std::tgamma(c - a));
  return gamma_factor * integral;
}

// ---------------------------------------------------------------------------
// Twisted cycle r~_k: C_0 (circle about 0) + [eps, 1-eps] + C_1 (circle
// about 1) loaded with the multivalued v_x, with branch-correcting
// coefficients 1/(prod lambda - 1) and -1/(lambda_k - 1).

struct CycleSpec {
  double eps = 0.25;
  double xi = 0.05;
  int k = 1;
  int panels = 64;    // subdivisions per piece
  int gl_order = 16;  // Gauss-Legendre order per panel

  void validate() const {
    if (!(eps > 0.0 && eps < 0.5)) throw domain_error("cycle: need 0 < eps < 1/2");
    if (!(xi < std::min(eps, 1.0 / (1.0 + eps))) || xi <= 0.0)
      throw domain_error("cycle: need 0 < xi < min(eps, 1/(1+eps))");
  }
};

// Base point x^{(k)} = (xi, xi^2, ..., e^{-pi i} xi^k, ..., xi^m).
inline XPoint<Complex> base_point(int m, int k, double xi) {
  std::vector<Complex> x(m);
  for (int l = 1; l <= m; ++l) x[l - 1] = std::pow(xi, l);
  x[k - 1] = -std::pow(xi, k);  // arg = -pi by pow_branch convention
  return XPoint<Complex>(std::move(x));
}

namespace detail {

// Tracks log v_x(s) continuously along a path sampled at small steps:
//   v_x(s) = prod_{l<k} (1 - (x_k/x_l)/s)^{alpha_l}
//            * (1 - x_k/s)^{alpha_{m+1}-1}
//            * prod_{l>k} (1 - (x_l/x_k) s)^{alpha_l}
//            * s^{E} (1-s)^{alpha_k+1},
//   E = sum_{l<k} alpha_l + alpha_{m+1} + alpha_{m+2} - 1.
// The starting branch at real s in (0,1) takes every factor principal.
class BranchTracker {
 public:
  BranchTracker(const Alphas<Complex>& al, const XPoint<Complex>& x, int k,
                double s0)
      : al_(al), k_(k), m_(al.m()) {
    for (int l = 1; l < k; ++l) q_.push_back(x.x[k - 1] / x.x[l - 1]);
    xk_ = x.x[k - 1];
    for (int l = k + 1; l <= m_; ++l) r_.push_back(x.x[l - 1] / x.x[k - 1]);
    exp_s_ = al_[m_ + 1] + al_[m_ + 2] - Complex(1);
    for (int l = 1; l < k; ++l) exp_s_ += al_[l];
    Complex s(s0, 0.0);
    for (auto& q : q_) log_q_.push_back(std::log(Complex(1) - q / s));
    log_k_ = std::log(Complex(1) - xk_ / s);
    for (auto& r : r_) log_r_.push_back(std::log(Complex(1) - r * s));
    log_s_ = std::log(s);
    log_1ms_ = std::log(Complex(1) - s);
    s_ = s;
  }

  // step must be small enough that no factor's argument moves by >= pi
  void move_to(Complex s) {
    for (size_t i = 0; i < q_.size(); ++i)
      continue_log(log_q_[i], Complex(1) - q_[i] / s);
    continue_log(log_k_, Complex(1) - xk_ / s);
    for (size_t i = 0; i < r_.size(); ++i)
      continue_log(log_r_[i], Complex(1) - r_[i] * s);
    continue_log(log_s_, s);
    continue_log(log_1ms_, Complex(1) - s);
    s_ = s;
  }

  Complex value() const {
    Complex logv(0.0, 0.0);
    for (size_t i = 0; i < q_.size(); ++i) logv += al_[1 + int(i)] * log_q_[i];
    logv += (al_[m_ + 1] - Complex(1)) * log_k_;
    for (size_t i = 0; i < r_.size(); ++i)
      logv += al_[k_ + 1 + int(i)] * log_r_[i];
    logv += exp_s_ * log_s_;
    logv += (al_[k_] + Complex(1)) * log_1ms_;
    return std::exp(logv);
  }

  Complex position() const { return s_; }

 private:
  static void continue_log(Complex& acc, Complex new_base) {
    Complex d = std::log(new_base) - acc;
    double im = d.imag();
    while (im > std::numbers::pi) im -= 2.0 * std::numbers::pi;
    while (im < -std::numbers::pi) im += 2.0 * std::numbers::pi;
    acc += Complex(d.real(), im);
  }

  Alphas<Complex> al_;
  int k_, m_;
  std::vector<Complex> q_, r_;
  Complex xk_, exp_s_;
  std::vector<Complex> log_q_, log_r_;
  Complex log_k_, log_s_, log_1ms_;
  Complex s_;
};

// integrate v(s)*extra(s) ds along a parametrized path, continuing the
// branch through the panel points in order
inline Complex integrate_piece(
    BranchTracker& br,
    const std::function<std::pair<Complex, Complex>(double)>& path,
    const std::function<Complex(Complex)>& extra, int panels, int gl_order) {
  static thread_local std::map<int, quad::GaussLegendre> cache;
  auto it = cache.find(gl_order);
  if (it == cache.end())
    it = cache.emplace(gl_order, quad::GaussLegendre(gl_order)).first;
  const auto& gl = it->second;
  Complex total(0.0, 0.0);
  for (int p = 0; p < panels; ++p) {
    double t0 = double(p) / panels, t1 = double(p + 1) / panels;
    for (int j = 0; j < gl_order; ++j) {
      double tau = t0 + (t1 - t0) * (gl.node[j] + 1.0) / 2.0;
      auto [s, ds] = path(tau);
      br.move_to(s);
      total += gl.weight[j] * (t1 - t0) / 2.0 * br.value() * extra(s) * ds;
    }
  }
  return total;
}

}  // namespace detail

struct CycleIntegralResult {
  Complex value;
  double monodromy_err_c0 = 0.0;  // |continued/start - prod lambda|
  double monodromy_err_c1 = 0.0;  // |continued/start - lambda_k|
};

// Integral of v_x * extra(s) ds over the weighted chain r~_k at the base
// point x^{(k)}; extra defaults to the phi_0 pullback density 1/(s(1-s)).
// j >= 1 selects the phi_j pullback instead (extra factor
// (1-x_j)/(t - x_j), t = x_k/s).
inline CycleIntegralResult cycle_integral(const Params<Complex>& p,
                                          const CycleSpec& spec, int j = 0) {
  spec.validate();
  const int m = p.m(), k = spec.k;
  if (k < 1 || k > m) throw domain_error("cycle_integral: k out of range");
  auto al = alphas(p);
  XPoint<Complex> x = base_point(m, k, spec.xi);

  Complex lambda_prod(1.0, 0.0);
  for (int l = 1; l < k; ++l)
    lambda_prod *= std::exp(Complex(0.0, 2.0 * std::numbers::pi) * al[l]);
  lambda_prod *= std::exp(Complex(0.0, 2.0 * std::numbers::pi) * al[m + 1]);
  lambda_prod *= std::exp(Complex(0.0, 2.0 * std::numbers::pi) * al[m + 2]);
  Complex lambda_k = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * al[k]);
  if (std::abs(lambda_prod - Complex(1)) < 1e-12 ||
      std::abs(lambda_k - Complex(1)) < 1e-12)
    throw domain_error("cycle_integral: branch coefficient pole (lambda = 1)");
  Complex c0 = Complex(1) / (lambda_prod - Complex(1));
  Complex c1 = Complex(-1) / (lambda_k - Complex(1));

  std::function<Complex(Complex)> extra;
  if (j == 0) {
    extra = [](Complex s) { return Complex(1) / (s * (Complex(1) - s)); };
  } else {
    Complex xj = x.x[j - 1], xk = x.x[k - 1];
    extra = [xj, xk](Complex s) {
      Complex t = xk / s;
      return (Complex(1) - xj) / (t - xj) / (s * (Complex(1) - s));
    };
  }

  const double eps = spec.eps;
  CycleIntegralResult out;

  // C_0: circle of radius eps about 0, starting at eps, counterclockwise
  detail::BranchTracker br0(al, x, k, eps);
  Complex v_start = br0.value();
  Complex i0 = detail::integrate_piece(
      br0,
      [eps](double tau) {
        double th = 2.0 * std::numbers::pi * tau;
        Complex e(std::cos(th), std::sin(th));
        return std::pair{eps * e,
                         eps * Complex(0.0, 2.0 * std::numbers::pi) * e};
      },
      extra, spec.panels, spec.gl_order);
  br0.move_to(Complex(eps, 0.0));
  out.monodromy_err_c0 =
      std::abs(br0.value() / v_start - lambda_prod) / std::abs(lambda_prod);

  // segment [eps, 1-eps] on the principal branch
  detail::BranchTracker brs(al, x, k, eps);
  Complex i1 = detail::integrate_piece(
      brs,
      [eps](double tau) {
        return std::pair{Complex(eps + (1.0 - 2.0 * eps) * tau, 0.0),
                         Complex(1.0 - 2.0 * eps, 0.0)};
      },
      extra, spec.panels, spec.gl_order);

  // C_1: circle about 1 starting at 1-eps, counterclockwise; branch is the
  // continuation along the segment.
  brs.move_to(Complex(1.0 - eps, 0.0));
  Complex v1_start = brs.value();
  Complex i2 = detail::integrate_piece(
      brs,
      [eps](double tau) {
        double th = std::numbers::pi + 2.0 * std::numbers::pi * tau;
        Complex e(std::cos(th), std::sin(th));
        return std::pair{Complex(1.0, 0.0) + eps * e,
                         eps * Complex(0.0, 2.0 * std::numbers::pi) * e};
      },
      extra, spec.panels, spec.gl_order);
  brs.move_to(Complex(1.0 - eps, 0.0));
  out.monodromy_err_c1 =
      std::abs(brs.value() / v1_start - lambda_k) / std::abs(lambda_k);

  out.value = c0 * i0 + i1 + c1 * i2;
  return out;
}

// Series side of the chain pairing: Gamma prefactors times the truncated
// Laurent sum (without the multivalued x-prefactor of f^{(k)}).
inline Complex chain_pairing_series(const Params<Complex>& p, int k,
                           const XPoint<Complex>& x, int order) {
  const int m = p.m();
  Complex sum_bkm1(0);
  for (int l = 1; l < k; ++l) sum_bkm1 += p.b[l - 1];
  Complex g = gamma_complex(p.c - p.a);
  for (int l = 1; l <= m; ++l) g *= gamma_complex(Complex(1) - p.b[l - 1]);
  g *= gamma_complex(sum_bkm1 - p.c);
  g *= gamma_complex(Complex(1) - sum_bkm1 + p.c);

  Complex sum_bk = sum_bkm1 + p.b[k - 1];
  Complex g0 = gamma_complex(p.c - p.a);
  for (int l = 1; l <= m; ++l)
    if (l != k) g0 *= gamma_complex(Complex(1) - p.b[l - 1]);
  g0 *= gamma_complex(-sum_bk + p.c);
  g0 *= gamma_complex(Complex(2) + sum_bkm1 - p.c);

  Complex s(0.0, 0.0);
  std::vector<std::int64_t> caps(m, order);
  fdhg::detail::for_each_index(
      caps, -1, [&](const std::vector<std::int64_t>& n, std::int64_t) {
        Complex cn = fdhg::detail::fk_coeff_ratio(p, k, n) / g0;
        auto e = fdhg::detail::fk_monomial_exponents(m, k, n);
        Complex mono(1);
        for (int l = 0; l < m; ++l)
          if (e[l] != 0) mono *= ipow(x.x[l], e[l]);
        s += cn * mono;
      });
  return g * s;
}

struct TheoremReport {
  Complex lhs, rhs;
  double rel_err = 0.0;
  double monodromy_err_c0 = 0.0;
  double monodromy_err_c1 = 0.0;
};

// The cycle pairing int_{r_k} u_x phi_0 equals the Gamma-and-phase prefactor
// times f^{(k)} at the base point. The left side is computed through the
// s-coordinate pullback, the right side from gamma_complex and the series.
inline TheoremReport verify_theorem_6_1(const Params<Complex>& p,
                                        const CycleSpec& spec,
                                        int series_order = 30) {
  const int m = p.m(), k = spec.k;
  auto al = alphas(p);
  if constexpr (true) {
    // genericity guard: reject near-integer alphas, where the branch
    // coefficients degenerate
    for (int i = 0; i <= m + 2; ++i) {
      double re = al[i].real();
      if (al[i].imag() == 0.0 && std::abs(re - std::round(re)) < 1e-9)
        throw domain_error("verify_theorem_6_1: alpha_i too close to integer");
    }
  }
  XPoint<Complex> x = base_point(m, k, spec.xi);
  auto cyc = cycle_integral(p, spec, 0);

  // u_x(iota(s)) iota* phi_0 = e^{-pi i (sum_{l<k} alpha_l + alpha_{m+1})}
  //   * prod_{l<k} x_l^{alpha_l} * x_k^{alpha_0 + sum_{l>=k} alpha_l + 1}
  //   * v_x(s) ds/(s(1-s))
  Complex phase_exp(0.0, 0.0);
  for (int l = 1; l < k; ++l) phase_exp += al[l];
  phase_exp += al[m + 1];
  Complex pref = std::exp(Complex(0.0, -std::numbers::pi) * phase_exp);
  for (int l = 1; l < k; ++l) pref *= pow_branch(x.x[l - 1], al[l]);
  Complex xk_exp = al[0] + Complex(1);
  for (int l = k; l <= m; ++l) xk_exp += al[l];
  pref *= pow_branch(x.x[k - 1], xk_exp);

  TheoremReport rep;
  rep.lhs = pref * cyc.value;
  rep.monodromy_err_c0 = cyc.monodromy_err_c0;
  rep.monodromy_err_c1 = cyc.monodromy_err_c1;

  Complex sum_bkm1(0);
  for (int l = 1; l < k; ++l) sum_bkm1 += p.b[l - 1];
  Complex g = gamma_complex(p.c - p.a);
  for (int l = 1; l <= m; ++l) g *= gamma_complex(Complex(1) - p.b[l - 1]);
  g *= gamma_complex(sum_bkm1 - p.c) * gamma_complex(Complex(1) - sum_bkm1 + p.c);
  Complex phase =
      std::exp(Complex(0.0, std::numbers::pi) * (sum_bkm1 - p.c + p.a));
  Truncation t;
  t.order = series_order;
  t.rho = 0.9;  // base-point ratios are ~xi, well inside
  Complex fk = fk_eval_float(p, x, k, t).value;
  rep.rhs = g * phase * fk;
  rep.rel_err = std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs);
  return rep;
}

}  // namespace fdhg
