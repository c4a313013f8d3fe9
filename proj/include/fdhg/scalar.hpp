#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace fdhg {

// Exact field element: arbitrary-precision rational, always in lowest terms
// with positive denominator (GMP canonical form). Expression templates are
// disabled so the type composes with Eigen.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

using Complex = std::complex<double>;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a closed-form self-check disagrees with the
// computed quantity; indicates a bug, not bad input.
struct internal_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static bool is_zero(const Rational& v) { return v == 0; }
  static double magnitude(const Rational& v) {
    return std::abs(static_cast<double>(v));
  }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool is_exact = false;
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static double magnitude(const Complex& v) { return std::abs(v); }
};

inline bool is_integer(const Rational& v) { return denominator(v) == 1; }

inline std::int64_t to_int(const Rational& v) {
  if (!is_integer(v)) throw domain_error("expected an integer rational");
  return static_cast<std::int64_t>(numerator(v));
}

inline Rational factorial(std::int64_t n) {
  if (n < 0) throw domain_error("factorial of negative integer");
  BigInt f = 1;
  for (std::int64_t j = 2; j <= n; ++j) f *= j;
  return Rational(f);
}

// 1/Gamma(n) at an integer point; zero at the poles n <= 0.
inline Rational rgamma_int(std::int64_t n) {
  if (n <= 0) return Rational(0);
  return Rational(1) / factorial(n - 1);
}

// (s,n) = s(s+1)...(s+n-1), with (s,0) = 1.
template <class S>
S pochhammer(const S& s, std::int64_t n) {
  S r(1);
  for (std::int64_t j = 0; j < n; ++j) r *= s + S(j);
  return r;
}

// Gamma(z) / Gamma(z+shift) for integer shift, as a rational function of z.
// Stays exact over Rational and pole-free for generic z.
template <class S>
S gamma_ratio(const S& z, std::int64_t shift) {
  if (shift >= 0) {
    S r(1);
    for (std::int64_t j = 0; j < shift; ++j) r *= z + S(j);
    if (scalar_traits<S>::is_zero(r))
      throw domain_error("gamma ratio pole: z at a nonpositive integer");
    return S(1) / r;
  }
  S r(1);
  for (std::int64_t j = 1; j <= -shift; ++j) r *= z - S(j);
  return r;
}

// Integer power with negative exponents allowed (base must be nonzero then).
template <class S>
S ipow(const S& base, std::int64_t e) {
  if (e < 0) {
    if (scalar_traits<S>::is_zero(base))
      throw domain_error("negative power of zero");
    return S(1) / ipow(base, -e);
  }
  S r(1);
  S b = base;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  return r;
}

// "p/q" (or plain "p") decimal serialization of rationals.
inline std::string to_string(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw domain_error("zero denominator in '" + s + "'");
    return Rational(num) / Rational(den);
  } catch (const std::exception&) {
    throw domain_error("cannot parse rational '" + s + "'");
  }
}

}  // namespace fdhg
