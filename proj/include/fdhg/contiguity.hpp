#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "fdhg/cohomology.hpp"
#include "fdhg/series.hpp"

namespace fdhg {

// One contiguity step in parameter space.
struct Step {
  enum Kind {
    A_DOWN,    // a -> a-1 at fixed c
    C_DOWN,    // c -> c-1
    B_DOWN,    // b_k -> b_k - 1               (uses index)
    AC_DIAG,   // a -> a-1 and c -> c-1 together
  };
  Kind kind;
  int index = 0;  // 1..m, for B_DOWN

  std::string name() const {
    switch (kind) {
      case A_DOWN: return "a_down";
      case C_DOWN: return "c_down";
      case B_DOWN: return "b_down:" + std::to_string(index);
      case AC_DIAG: return "ac_diag";
    }
    return "?";
  }
};

enum class Variant { F, Fk };

template <class S>
Params<S> apply_step(const Step& s, const Params<S>& p) {
  switch (s.kind) {
    case Step::A_DOWN: return p.shifted_a(S(-1));
    case Step::C_DOWN: return p.shifted_c(S(-1));
    case Step::B_DOWN: return p.shifted_b(s.index, S(-1));
    case Step::AC_DIAG: return p.shifted_a(S(-1)).shifted_c(S(-1));
  }
  throw domain_error("unknown step");
}

// The matrix M with F_target = M F_source, where the step is taken at the
// source parameters p.
template <class S>
Mat<S> step_matrix(const Step& s, Variant variant, const Params<S>& p,
                   const XPoint<S>& x) {
  if (variant == Variant::F) {
    switch (s.kind) {
      case Step::A_DOWN: return d_a(p, x);
      case Step::C_DOWN: return d_c(p, x);
      case Step::B_DOWN: return d_bk(p, x, s.index);
      case Step::AC_DIAG: {
        // the Gamma-normalized vector satisfies F~(a-1,b,c-1) = P_0 F~;
        // converting the prefactors gives
        // F(a-1,b,c-1) = ((a-1)/(c-1)) P_0 F.
        if (p.c == S(1)) throw domain_error("ac_diag: c = 1");
        auto al = alphas(p);
        Mat<S> p0 = q_matrix(al, x, 0) * detail::c_inverse(al);
        return ((p.a - S(1)) / (p.c - S(1))) * p0;
      }
    }
  } else {
    switch (s.kind) {
      case Step::A_DOWN: return d_a_fk(p, x);
      case Step::C_DOWN: return d_c_fk(p, x);
      case Step::B_DOWN: return d_l_fk(p, x, s.index);
      case Step::AC_DIAG: {
        // F^{(k)}(a-1,b,c-1) = -P_0 F^{(k)}
        auto al = alphas(p);
        Mat<S> p0 = q_matrix(al, x, 0) * detail::c_inverse(al);
        return S(-1) * p0;
      }
    }
  }
  throw domain_error("unknown step");
}

template <class S>
struct ParamPath {
  Params<S> start;
  std::vector<Step> steps;

  Params<S> target() const {
    Params<S> p = start;
    for (const Step& s : steps) p = apply_step(s, p);
    return p;
  }
};

struct StepRecord {
  std::string step;
  std::string at;  // parameter point the matrix was built at
};

template <class S>
std::string format_point(const Params<S>& p) {
  std::ostringstream os;
  os << "(a=" << p.a << ", b=(";
  for (int i = 0; i < p.m(); ++i) os << (i ? "," : "") << p.b[i];
  os << "), c=" << p.c << ")";
  return os.str();
}

// Multiply the seed through every step matrix in order.
template <class S>
Vec<S> walk(const ParamPath<S>& path, Vec<S> seed, const XPoint<S>& x,
            Variant variant, std::vector<StepRecord>* log = nullptr) {
  Params<S> p = path.start;
  for (const Step& s : path.steps) {
    Mat<S> mat;
    try {
      mat = step_matrix(s, variant, p, x);
    } catch (const std::exception& e) {
      throw domain_error("walk: step " + s.name() + " failed at " +
                         format_point(p) + ": " + e.what());
    }
    if (log) log->push_back({s.name(), format_point(p)});
    seed = mat * seed;
    p = apply_step(s, p);
  }
  return seed;
}

// Closed-form start vector at a = -1:
//   F_D(-1,b,c;x) = 1 - sum_i (b_i/c) x_i, entry i = (x_i - 1)/c.
template <class S>
Vec<S> seed_vector_b0(const Params<S>& p, const XPoint<S>& x) {
  if (scalar_traits<S>::is_zero(p.c)) throw domain_error("seed_vector_b0: c = 0");
  if (p.a != S(-1)) throw domain_error("seed_vector_b0: a != -1");
  const int m = p.m();
  Vec<S> v(m + 1);
  S head(1);
  for (int i = 1; i <= m; ++i) head -= p.b[i - 1] / p.c * x.x[i - 1];
  v[0] = head;
  for (int i = 1; i <= m; ++i) v[i] = (x.x[i - 1] - S(1)) / p.c;
  return v;
}

}  // namespace fdhg
