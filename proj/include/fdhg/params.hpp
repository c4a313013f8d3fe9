#pragma once

#include <vector>

#include "fdhg/scalar.hpp"

namespace fdhg {

// Parameter vector (a, b_1..b_m, c) of F_D.
template <class S>
struct Params {
  S a;
  std::vector<S> b;
  S c;

  int m() const { return static_cast<int>(b.size()); }

  Params shifted_a(const S& da) const { return {a + da, b, c}; }
  Params shifted_c(const S& dc) const { return {a, b, c + dc}; }
  Params shifted_b(int k, const S& db) const {
    Params p = *this;
    p.b[k - 1] += db;
    return p;
  }
};

// Exponents alpha_0..alpha_{m+2}; they sum to zero by construction.
template <class S>
struct Alphas {
  std::vector<S> alpha;  // size m+3

  int m() const { return static_cast<int>(alpha.size()) - 3; }
  const S& operator[](int i) const { return alpha[i]; }
};

template <class S>
Alphas<S> alphas(const Params<S>& p) {
  const int m = p.m();
  if (m < 1) throw domain_error("need m >= 1");
  std::vector<S> al(m + 3);
  S sb(0);
  for (const S& bi : p.b) sb += bi;
  al[0] = -p.c + sb;
  for (int k = 1; k <= m; ++k) al[k] = -p.b[k - 1];
  al[m + 1] = p.c - p.a;
  al[m + 2] = p.a;
  return {std::move(al)};
}

// x_1..x_m with the implicit x_0 = 0, x_{m+1} = 1. All m+2 points must be
// pairwise distinct, otherwise det Q_k vanishes.
template <class S>
struct XPoint {
  std::vector<S> x;

  explicit XPoint(std::vector<S> xs) : x(std::move(xs)) {
    const int m = static_cast<int>(x.size());
    for (int i = 0; i < m; ++i) {
      if (x[i] == S(0) || x[i] == S(1))
        throw domain_error("x coordinate coincides with 0 or 1");
      for (int j = i + 1; j < m; ++j)
        if (x[i] == x[j]) throw domain_error("coincident x coordinates");
    }
  }

  int m() const { return static_cast<int>(x.size()); }

  // full coordinate x_i for i in 0..m+1
  S full(int i) const {
    if (i == 0) return S(0);
    if (i == m() + 1) return S(1);
    return x[i - 1];
  }
};

// Genericity condition: no alpha_k is an integer. Only meaningful for exact
// rational parameters.
inline bool is_generic(const Alphas<Rational>& al) {
  for (const Rational& a : al.alpha)
    if (is_integer(a)) return false;
  return true;
}

// Nonvanishing conditions under which C and Q_k stay invertible at an
// integer parameter point.
template <class S>
bool integer_mode_admissible(const Alphas<S>& al) {
  const int m = al.m();
  for (int i = 0; i <= m + 2; ++i)
    if (scalar_traits<S>::is_zero(al[i])) return false;
  if (al[m + 2] == S(1)) return false;
  return true;
}

}  // namespace fdhg
