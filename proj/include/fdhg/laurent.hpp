#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fdhg/series.hpp"

namespace fdhg {

// Finite Laurent polynomial in x_1..x_m with a fixed rational exponent
// offset mu: the object represents  sum_v  coeff[v] * x^(v + mu)  with v an
// integer vector. theta_i and x_i d/dx_i act rationally on the (v + mu)
// exponents, so E_D operators stay inside this class.
class LaurentPoly {
 public:
  using Exp = std::vector<std::int64_t>;

  LaurentPoly(int m, std::vector<Rational> offset)
      : m_(m), mu_(std::move(offset)) {
    if (static_cast<int>(mu_.size()) != m_)
      throw domain_error("LaurentPoly: offset size mismatch");
  }
  explicit LaurentPoly(int m) : LaurentPoly(m, std::vector<Rational>(m, 0)) {}

  int vars() const { return m_; }
  const std::vector<Rational>& offset() const { return mu_; }
  const std::map<Exp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exp& v, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
      terms_.emplace(v, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [v, c] : terms_) c *= s;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) {
    return a *= s;
  }

  // theta_i = x_i d/dx_i: coefficient picks up (v_i + mu_i).
  LaurentPoly theta(int i) const {
    LaurentPoly r(m_, mu_);
    for (const auto& [v, c] : terms_)
      r.add_term(v, c * (Rational(v[i]) + mu_[i]));
    return r;
  }

  // total theta = sum_i theta_i
  LaurentPoly theta_total() const {
    LaurentPoly r(m_, mu_);
    for (const auto& [v, c] : terms_) {
      Rational w(0);
      for (int i = 0; i < m_; ++i) w += Rational(v[i]) + mu_[i];
      r.add_term(v, c * w);
    }
    return r;
  }

  // multiplication by x_i
  LaurentPoly shift(int i, std::int64_t by = 1) const {
    LaurentPoly r(m_, mu_);
    for (const auto& [v, c] : terms_) {
      Exp w = v;
      w[i] += by;
      r.add_term(w, c);
    }
    return r;
  }

  // d/dx_i = x_i^{-1} theta_i
  LaurentPoly deriv(int i) const { return theta(i).shift(i, -1); }

  // Evaluate at rational x; requires integer offsets.
  Rational eval(const XPoint<Rational>& x) const {
    std::vector<std::int64_t> mu_int(m_);
    for (int i = 0; i < m_; ++i) {
      if (!is_integer(mu_[i]))
        throw domain_error("LaurentPoly::eval: non-integer exponent offset");
      mu_int[i] = to_int(mu_[i]);
    }
    Rational sum(0);
    for (const auto& [v, c] : terms_) {
      Rational mono(1);
      for (int i = 0; i < m_; ++i) mono *= ipow(x.x[i], v[i] + mu_int[i]);
      sum += c * mono;
    }
    return sum;
  }

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (m_ != o.m_ || mu_ != o.mu_)
      throw domain_error("LaurentPoly: incompatible offsets");
  }

  int m_;
  std::vector<Rational> mu_;
  std::map<Exp, Rational> terms_;
};

// Truncated F_D series as a polynomial (offset 0); coefficients are the
// Pochhammer ratios, exact for rational parameters. Integer-mode forced
// caps make the result the complete finite sum.
inline LaurentPoly fd_laurent(const Params<Rational>& p, int order,
                              bool* complete = nullptr) {
  const int m = p.m();
  std::int64_t total_cap = detail::forced_total_cap(p.a);
  bool fin = total_cap >= 0 && total_cap <= order;
  std::vector<std::int64_t> caps(m);
  for (int l = 0; l < m; ++l)
    caps[l] = detail::forced_cap(p.b[l], fin ? total_cap : order);
  if (complete) *complete = fin;
  LaurentPoly poly(m);
  detail::for_each_index(
      caps, fin ? total_cap : -1,
      [&](const std::vector<std::int64_t>& n, std::int64_t total) {
        Rational t = pochhammer(p.a, total) / pochhammer(p.c, total);
        for (int l = 0; l < m; ++l)
          t *= pochhammer(p.b[l], n[l]) / factorial(n[l]);
        if (t == 0) return;
        poly.add_term(n, t);
      });
  return poly;
}

// Truncated f^{(k)} series with relative coefficients Gamma^{(k)}_0 /
// Gamma^{(k)}_n (the overall 1/Gamma^{(k)}_0 scale is dropped; every use is
// scale-free). The prefactor exponents live in the offset.
inline LaurentPoly fk_laurent(const Params<Rational>& p, int k, int order) {
  const int m = p.m();
  LaurentPoly poly(m, fk_prefactor_exponents(p, k));
  std::vector<std::int64_t> caps(m, order);
  detail::for_each_index(
      caps, -1, [&](const std::vector<std::int64_t>& n, std::int64_t) {
        Rational c = detail::fk_coeff_ratio(p, k, n);
        if (c == 0) return;
        poly.add_term(detail::fk_monomial_exponents(m, k, n), c);
      });
  return poly;
}

// Complete finite f^{(k)} in integer mode, exactly scaled (reciprocal
// Gammas evaluated at the integer points), with mu folded into the offset.
inline LaurentPoly fk_laurent_exact(const Params<Rational>& p, int k) {
  const int m = p.m();
  std::int64_t nk_max = to_int(p.c - p.a) - 1;
  std::vector<std::int64_t> caps(m);
  for (int l = 1; l <= m; ++l)
    caps[l - 1] = (l == k) ? nk_max : -to_int(p.b[l - 1]);
  Rational sum_bk(0), sum_bkm1(0);
  for (int l = 1; l <= k; ++l) sum_bk += p.b[l - 1];
  for (int l = 1; l < k; ++l) sum_bkm1 += p.b[l - 1];
  LaurentPoly poly(m, fk_prefactor_exponents(p, k));
  detail::for_each_index(
      caps, -1, [&](const std::vector<std::int64_t>& n, std::int64_t) {
        std::int64_t s_le = 0, s_gt = 0;
        for (int l = 1; l <= k; ++l) s_le += n[l - 1];
        for (int l = k + 1; l <= m; ++l) s_gt += n[l - 1];
        Rational g = rgamma_int(to_int(p.c - p.a) - n[k - 1]);
        for (int l = 1; l <= m; ++l) {
          if (l != k) g *= rgamma_int(1 - to_int(p.b[l - 1]) - n[l - 1]);
          g *= rgamma_int(1 + n[l - 1]);
        }
        g *= rgamma_int(to_int(-sum_bk + p.c) - s_le + s_gt);
        g *= rgamma_int(to_int(Rational(2) + sum_bkm1 - p.c) + s_le - s_gt);
        if (g == 0) return;
        poly.add_term(detail::fk_monomial_exponents(m, k, n), g);
      });
  return poly;
}

}  // namespace fdhg
