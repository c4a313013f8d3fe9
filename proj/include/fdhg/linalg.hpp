#pragma once

#include <Eigen/Dense>

#include "fdhg/scalar.hpp"

namespace fdhg {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Determinant by Gaussian elimination. Pivot choice: any nonzero entry in
// exact mode, largest magnitude in float mode.
template <class S>
S determinant(Mat<S> a) {
  const Eigen::Index n = a.rows();
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    if constexpr (scalar_traits<S>::is_exact) {
      for (Eigen::Index r = c; r < n; ++r)
        if (!scalar_traits<S>::is_zero(a(r, c))) {
          piv = r;
          break;
        }
    } else {
      double best = 0.0;
      for (Eigen::Index r = c; r < n; ++r) {
        double w = scalar_traits<S>::magnitude(a(r, c));
        if (w > best) {
          best = w;
          piv = r;
        }
      }
    }
    if (piv < 0) return S(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (scalar_traits<S>::is_zero(a(r, c))) continue;
      S f = a(r, c) / a(c, c);
      a.row(r).tail(n - c) -= f * a.row(c).tail(n - c);
    }
  }
  return det;
}

// Gauss-Jordan inverse with the same pivot policy.
template <class S>
Mat<S> inverse(const Mat<S>& m) {
  const Eigen::Index n = m.rows();
  Mat<S> a = m;
  Mat<S> inv = Mat<S>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    if constexpr (scalar_traits<S>::is_exact) {
      for (Eigen::Index r = c; r < n; ++r)
        if (!scalar_traits<S>::is_zero(a(r, c))) {
          piv = r;
          break;
        }
    } else {
      double best = 0.0;
      for (Eigen::Index r = c; r < n; ++r) {
        double w = scalar_traits<S>::magnitude(a(r, c));
        if (w > best) {
          best = w;
          piv = r;
        }
      }
    }
    if (piv < 0) throw singular_matrix_error("singular matrix in inverse");
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      inv.row(piv).swap(inv.row(c));
    }
    S p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || scalar_traits<S>::is_zero(a(r, c))) continue;
      S f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

template <class S>
double max_abs(const Vec<S>& v) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    r = std::max(r, scalar_traits<S>::magnitude(v[i]));
  return r;
}

}  // namespace fdhg
