#ifndef ICOSOLVE_GAMMA_HPP
#define ICOSOLVE_GAMMA_HPP

#include <array>
#include <cmath>
#include <complex>

#include "numeric.hpp"

namespace icosolve {

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coefficients{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// Valid for Re(z) >= 1/2.
inline Complex lanczos_gamma(Complex z) {
  z -= 1.0;
  Complex x = lanczos_coefficients[0];
  for (std::size_t i = 1; i < lanczos_coefficients.size(); ++i)
    x += lanczos_coefficients[i] / (z + double(i));
  const Complex t = z + lanczos_g + 0.5;
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace detail

/// Complex Gamma function (named after std::tgamma, which it extends). Throws PoleError at 0, -1, -2, ...
inline Complex tgamma(Complex z) {
  require_finite(z, "gamma argument");
  if (detail::is_nonpositive_integer(z))
    throw Error(ErrorKind::PoleError, "gamma has a pole at a non-positive integer");
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * detail::lanczos_gamma(1.0 - z));
  return detail::lanczos_gamma(z);
}

/// 1 / Gamma(z), entire; exactly zero at the poles of Gamma.
inline Complex rgamma(Complex z) {
  require_finite(z, "gamma argument");
  if (detail::is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) return std::sin(pi * z) * detail::lanczos_gamma(1.0 - z) / pi;
  return 1.0 / detail::lanczos_gamma(z);
}

}  // namespace icosolve

#endif  // ICOSOLVE_GAMMA_HPP
