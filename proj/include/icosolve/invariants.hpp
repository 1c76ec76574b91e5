#ifndef ICOSOLVE_INVARIANTS_HPP
#define ICOSOLVE_INVARIANTS_HPP

#include <array>
#include <cmath>

#include "error.hpp"
#include "numeric.hpp"

namespace icosolve {

/// Homogeneous coordinates (z : w) on the projective line. Inhomogeneous
/// evaluation at Y is FormPoint{Y, 1}.
struct FormPoint {
  Complex z;
  Complex w{1.0};
};

/// Coordinates beyond this modulus overflow the degree-30 form quickly.
inline constexpr double form_validity_radius = 10.0;

namespace detail {

struct FifthPowers {
  Complex z5, w5;
};

inline FifthPowers fifth_powers(const FormPoint& pt) {
  require_finite(pt.z, "form coordinate z");
  require_finite(pt.w, "form coordinate w");
  if (std::abs(pt.z) > form_validity_radius || std::abs(pt.w) > form_validity_radius)
    throw Error(ErrorKind::RangeError, "form evaluation outside |z|,|w| <= 10");
  if (pt.z == Complex{} && pt.w == Complex{})
    throw Error(ErrorKind::InvalidArgument, "(0, 0) is not a point of the projective line");
  Complex z2 = pt.z * pt.z, w2 = pt.w * pt.w;
  return {z2 * z2 * pt.z, w2 * w2 * pt.w};
}

}  // namespace detail

/// Vertex form zw(z^10 + 11 z^5 w^5 - w^10), degree 12.
inline Complex form_f(const FormPoint& pt) {
  auto [z5, w5] = detail::fifth_powers(pt);
  return pt.z * pt.w * (z5 * (z5 + 11.0 * w5) - w5 * w5);
}

/// Face-center form -(z^20 + w^20) + 228(z^15 w^5 - z^5 w^15) - 494 z^10 w^10,
/// degree 20.
inline Complex form_H(const FormPoint& pt) {
  auto [z5, w5] = detail::fifth_powers(pt);
  Complex z10 = z5 * z5, w10 = w5 * w5;
  return -(z10 * z10 + w10 * w10) + 228.0 * z5 * w5 * (z10 - w10) - 494.0 * z10 * w10;
}

/// Edge-midpoint form (z^30 + w^30) + 522(z^25 w^5 - z^5 w^25)
/// - 10005(z^20 w^10 + z^10 w^20), degree 30.
inline Complex form_T(const FormPoint& pt) {
  auto [z5, w5] = detail::fifth_powers(pt);
  Complex z10 = z5 * z5, w10 = w5 * w5;
  Complex z20 = z10 * z10, w20 = w10 * w10;
  return (z20 * z10 + w20 * w10) + 522.0 * z5 * w5 * (z20 - w20) -
         10005.0 * z10 * w10 * (z10 + w10);
}

/// |T^2 - 1728 f^5 + H^3| / max(1, |T^2|).
inline double syzygy_residual(const FormPoint& pt) {
  Complex f = form_f(pt), H = form_H(pt), T = form_T(pt);
  Complex f2 = f * f;
  Complex T2 = T * T;
  return std::abs(T2 - 1728.0 * f2 * f2 * f + H * H * H) / std::max(1.0, std::abs(T2));
}

/// e^(2 pi i m / 5) for any integer m.
inline Complex unity_root5(int m) {
  m %= 5;
  if (m < 0) m += 5;
  if (m == 0) return 1.0;
  return std::polar(1.0, 2.0 * pi * m / 5.0);
}

/// The five octahedral forms at (z, 1):
/// e^{3v} z^6 + 2 e^{2v} z^5 - 5 e^{v} z^4 - 5 e^{4v} z^2 - 2 e^{3v} z + e^{2v},
/// e = e^(2 pi i/5). nu = 0 is the classical octahedral form t.
inline Complex form_t_nu(Complex z, int nu) {
  if (nu < 0 || nu > 4) throw Error(ErrorKind::InvalidArgument, "nu must be in 0..4");
  require_finite(z, "octahedral form argument");
  if (std::abs(z) > form_validity_radius)
    throw Error(ErrorKind::RangeError, "form evaluation outside |z| <= 10");
  const Complex e1 = unity_root5(nu), e2 = unity_root5(2 * nu), e3 = unity_root5(3 * nu),
                e4 = unity_root5(4 * nu);
  Complex z2 = z * z;
  Complex z4 = z2 * z2;
  return e3 * z4 * z2 + 2.0 * e2 * z4 * z - 5.0 * e1 * z4 - 5.0 * e4 * z2 - 2.0 * e3 * z + e2;
}

inline std::array<Complex, 5> form_t_all(Complex z) {
  std::array<Complex, 5> t{};
  for (int nu = 0; nu < 5; ++nu) t[nu] = form_t_nu(z, nu);
  return t;
}

/// Icosahedral parameter J = H^3 / (1728 f^5). Vertices (f = 0) map to J = oo.
inline Complex J_of(const FormPoint& pt, const Tolerances& tol = {}) {
  Complex f = form_f(pt);
  if (std::abs(f) <= tol.degeneracy_tol)
    throw Error(ErrorKind::VertexSingularity, "f vanishes: the point is an icosahedron vertex (J = oo)");
  Complex H = form_H(pt);
  Complex f2 = f * f;
  return H * H * H / (1728.0 * f2 * f2 * f);
}

}  // namespace icosolve

#endif  // ICOSOLVE_INVARIANTS_HPP
