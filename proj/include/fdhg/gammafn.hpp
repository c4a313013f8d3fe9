#pragma once

#include <cmath>
#include <numbers>

#include "fdhg/scalar.hpp"

namespace fdhg {

namespace detail {

// Lanczos, g = 7, 9 coefficients.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coef[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

inline Complex lanczos_gamma_shifted(Complex z) {
  // valid for Re z >= 1/2; z here is the original argument
  z -= 1.0;
  Complex x = lanczos_coef[0];
  for (int i = 1; i < 9; ++i) x += lanczos_coef[i] / (z + double(i));
  Complex t = z + lanczos_g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
         std::exp(-t) * x;
}

}  // namespace detail

// Gamma(z) by Lanczos approximation, reflection formula for Re z < 1/2.
inline Complex gamma_complex(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 &&
      z.real() == std::floor(z.real())) {
    throw domain_error("gamma pole at nonpositive integer");
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::numbers::pi /
           (std::sin(std::numbers::pi * z) *
            detail::lanczos_gamma_shifted(1.0 - z));
  }
  return detail::lanczos_gamma_shifted(z);
}

// Principal-branch power with arg in (-pi, pi], except that a negative real
// base is assigned arg = -pi exactly. This matches the branch at the base
// point x^{(k)}, whose k-th coordinate is e^{-pi i} xi^k.
inline Complex pow_branch(Complex z, Complex s) {
  if (z == Complex(0.0, 0.0)) {
    if (s == Complex(0.0, 0.0)) return 1.0;
    throw domain_error("0^s with nonzero exponent in branch power");
  }
  double arg;
  if (z.imag() == 0.0 && z.real() < 0.0)
    arg = -std::numbers::pi;
  else
    arg = std::arg(z);
  Complex logz(std::log(std::abs(z)), arg);
  return std::exp(s * logz);
}

}  // namespace fdhg
