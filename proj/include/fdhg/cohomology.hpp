#pragma once

#include "fdhg/linalg.hpp"
#include "fdhg/params.hpp"

namespace fdhg {

// Everything here drops the common factor 2*pi*sqrt(-1) from the
// intersection pairing: we work with C~ = C/(2 pi i) and Q~ = Q/(2 pi i).
// The factor cancels in every product Q C^{-1} and Q Q^{-1}, which is what
// lets the contiguity matrices stay exact rationals.

// I_c(phi_{i,j}, phi_{p,q}) / (2 pi i) =
//   (d_{i,p}-d_{i,q})/alpha_i - (d_{j,p}-d_{j,q})/alpha_j
template <class S>
S intersection_number(const Alphas<S>& al, int i, int j, int p, int q) {
  auto kd = [](int u, int v) { return u == v ? 1 : 0; };
  if (scalar_traits<S>::is_zero(al[i]) || scalar_traits<S>::is_zero(al[j]))
    throw domain_error("intersection number needs nonzero alpha_i, alpha_j");
  return S(kd(i, p) - kd(i, q)) / al[i] - S(kd(j, p) - kd(j, q)) / al[j];
}

// C~ = (1/alpha_{m+1}) N + diag(1/alpha_{m+2}, 1/alpha_1, ..., 1/alpha_m)
template <class S>
Mat<S> c_matrix(const Alphas<S>& al) {
  const int m = al.m();
  for (int i = 1; i <= m + 2; ++i)
    if (scalar_traits<S>::is_zero(al[i]))
      throw domain_error("c_matrix: alpha_" + std::to_string(i) + " = 0");
  Mat<S> c = Mat<S>::Constant(m + 1, m + 1, S(1) / al[m + 1]);
  c(0, 0) += S(1) / al[m + 2];
  for (int i = 1; i <= m; ++i) c(i, i) += S(1) / al[i];
  return c;
}

// det C~ = -alpha_0 / prod_{i=1}^{m+2} alpha_i
template <class S>
S det_c_closed_form(const Alphas<S>& al) {
  const int m = al.m();
  S d = -al[0];
  for (int i = 1; i <= m + 2; ++i) d /= al[i];
  return d;
}

template <class S>
bool det_c_check(const Alphas<S>& al, double tol = 1e-10) {
  S computed = determinant<S>(c_matrix(al));
  S closed = det_c_closed_form(al);
  if constexpr (scalar_traits<S>::is_exact) {
    return computed == closed;
  } else {
    double ref = scalar_traits<S>::magnitude(closed);
    return scalar_traits<S>::magnitude(computed - closed) <= tol * ref;
  }
}

// I_c((t-x_k) phi_{l,m+2}, phi_j) / (2 pi i), the two cases of the
// entrywise evaluation; indices k, l in 0..m+1, j in 0..m.
template <class S>
S q_entry(const Alphas<S>& al, const XPoint<S>& x, int k, int l, int j) {
  const int m = al.m();
  if (al[m + 2] == S(1))
    throw domain_error("q_entry: alpha_{m+2} = 1");
  auto kd = [](int u, int v) { return u == v ? 1 : 0; };
  S xl = x.full(l), xk = x.full(k);
  if (j == 0) {
    S sum(0);
    for (int p = 1; p <= m + 1; ++p) sum += al[p] * x.full(p);
    return (xl - xk) * (S(kd(l, m + 1)) / al[m + 1] + S(1) / al[m + 2]) -
           (sum / al[m + 2] + S(1)) / (S(1) - al[m + 2]);
  }
  return (xl - xk) * S(kd(l, m + 1) - kd(l, j)) / al[l] -
         (S(1) - x.full(j)) / (S(1) - al[m + 2]);
}

// Q~_k from the entrywise formulas; k in 0..m+1.
template <class S>
Mat<S> q_matrix(const Alphas<S>& al, const XPoint<S>& x, int k) {
  const int m = al.m();
  for (int i = 1; i <= m + 2; ++i)
    if (scalar_traits<S>::is_zero(al[i]))
      throw domain_error("q_matrix: alpha_" + std::to_string(i) + " = 0");
  if (al[m + 2] == S(1)) throw domain_error("q_matrix: alpha_{m+2} = 1");
  S xk = x.full(k);
  S base = (S(1) - xk) / al[m + 1];
  S sum(0);
  for (int p = 1; p <= m + 1; ++p) sum += al[p] * x.full(p);
  Mat<S> q = Mat<S>::Constant(m + 1, m + 1, base);
  q(0, 0) += (S(1) - xk) / al[m + 2] -
             (sum / al[m + 2] + S(1)) / (S(1) - al[m + 2]);
  for (int j = 1; j <= m; ++j)
    q(0, j) -= (S(1) - x.full(j)) / (S(1) - al[m + 2]);
  for (int i = 1; i <= m; ++i) {
    q(i, 0) += (S(1) - x.full(i)) / al[m + 2];
    q(i, i) += (x.full(i) - xk) / al[i];
  }
  return q;
}

// det Q~_k = alpha_0 (1 + d_{k,0} alpha_0)
//            / ( prod_{j=1, j!=k}^{m+2} alpha_j * (alpha_{m+2}-1) )
//            * prod_{j=0, j!=k}^{m+1} (x_j - x_k)
template <class S>
S det_q_closed_form(const Alphas<S>& al, const XPoint<S>& x, int k) {
  const int m = al.m();
  S num = al[0] * (S(1) + (k == 0 ? al[0] : S(0)));
  S den = al[m + 2] - S(1);
  for (int j = 1; j <= m + 2; ++j)
    if (j != k) den *= al[j];
  S prod(1);
  for (int j = 0; j <= m + 1; ++j)
    if (j != k) prod *= x.full(j) - x.full(k);
  return num / den * prod;
}

namespace detail {

// Invert after confirming the computed determinant matches the known
// closed form; a mismatch is a hard internal error.
template <class S>
Mat<S> checked_inverse(const Mat<S>& m, const S& closed_det,
                       const char* what) {
  S d = determinant<S>(m);
  if constexpr (scalar_traits<S>::is_exact) {
    if (d != closed_det)
      throw internal_check_error(std::string(what) +
                                 ": determinant disagrees with closed form");
  } else {
    double ref = scalar_traits<S>::magnitude(closed_det);
    if (scalar_traits<S>::magnitude(d - closed_det) > 1e-8 * ref)
      throw internal_check_error(std::string(what) +
                                 ": determinant disagrees with closed form");
  }
  if (scalar_traits<S>::is_zero(closed_det))
    throw singular_matrix_error(std::string(what) + ": singular");
  return inverse(m);
}

template <class S>
Mat<S> c_inverse(const Alphas<S>& al) {
  return checked_inverse<S>(c_matrix(al), det_c_closed_form(al), "C");
}

template <class S>
Mat<S> q_inverse(const Alphas<S>& al, const XPoint<S>& x, int k) {
  return checked_inverse<S>(q_matrix(al, x, k), det_q_closed_form(al, x, k),
                            "Q_k");
}

}  // namespace detail

// One-step connection matrices for the vector F(a,b,c;x).

// F(a-1,b,c;x) = D_a F(a,b,c;x)
template <class S>
Mat<S> d_a(const Params<S>& p, const XPoint<S>& x) {
  if (p.c == p.a) throw domain_error("d_a: c = a");
  auto al = alphas(p);
  Mat<S> r = q_matrix(al, x, p.m() + 1) * detail::c_inverse(al);
  return ((p.a - S(1)) / (p.c - p.a)) * r;
}

// F(a,b,c-1;x) = D_c F(a,b,c;x)
template <class S>
Mat<S> d_c(const Params<S>& p, const XPoint<S>& x) {
  if (p.c == S(1)) throw domain_error("d_c: c = 1");
  auto al = alphas(p.shifted_a(S(1)));
  Mat<S> r =
      q_matrix(al, x, 0) * detail::q_inverse(al, x, p.m() + 1);
  return ((p.c - p.a - S(1)) / (p.c - S(1))) * r;
}

// F(a,b-e_k,c;x) = D_k F(a,b,c;x), 1 <= k <= m
template <class S>
Mat<S> d_bk(const Params<S>& p, const XPoint<S>& x, int k) {
  auto al = alphas(p.shifted_a(S(1)).shifted_c(S(1)));
  return q_matrix(al, x, k) * detail::q_inverse(al, x, 0);
}

// One-step connection matrices for F^{(k)}; independent of k, so none is
// taken.

template <class S>
Mat<S> d_a_fk(const Params<S>& p, const XPoint<S>& x) {
  if (p.c == p.a) throw domain_error("d_a_fk: c = a");
  auto al = alphas(p);
  Mat<S> r = q_matrix(al, x, p.m() + 1) * detail::c_inverse(al);
  return (S(1) / (p.a - p.c)) * r;
}

template <class S>
Mat<S> d_c_fk(const Params<S>& p, const XPoint<S>& x) {
  auto al = alphas(p.shifted_a(S(1)));
  Mat<S> r =
      q_matrix(al, x, 0) * detail::q_inverse(al, x, p.m() + 1);
  return (p.c - p.a - S(1)) * r;
}

template <class S>
Mat<S> d_l_fk(const Params<S>& p, const XPoint<S>& x, int l) {
  if (p.b[l - 1] == S(1)) throw domain_error("d_l_fk: b_l = 1");
  auto al = alphas(p.shifted_a(S(1)).shifted_c(S(1)));
  Mat<S> r = q_matrix(al, x, l) * detail::q_inverse(al, x, 0);
  return (S(1) / (S(1) - p.b[l - 1])) * r;
}

}  // namespace fdhg
