#ifndef ICOSOLVE_HYPERGEO_HPP
#define ICOSOLVE_HYPERGEO_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "gamma.hpp"
#include "invariants.hpp"
#include "numeric.hpp"

namespace icosolve {

/// Parameters of the Gauss function 2F1(a, b; c; z).
struct HypParams {
  Complex a, b, c;

  void validate() const {
    require_finite(a, "2F1 parameter a");
    require_finite(b, "2F1 parameter b");
    require_finite(c, "2F1 parameter c");
    if (c.imag() == 0.0 && c.real() <= 0.0 && std::floor(c.real()) == c.real())
      throw Error(ErrorKind::InvalidArgument, "2F1 parameter c must not be zero or a negative integer");
  }
};

/// The numerator and denominator functions of the icosahedral inverse, and
/// the hypergeometric equation they solve.
inline const HypParams numerator_params{11.0 / 60.0, 31.0 / 60.0, 6.0 / 5.0};
inline const HypParams denominator_params{-1.0 / 60.0, 19.0 / 60.0, 4.0 / 5.0};
inline const HypParams icosahedral_ode_params{11.0 / 60.0, -1.0 / 60.0, 2.0 / 3.0};

/// How a 2F1 value is obtained.
enum class Strategy {
  Auto,
  Direct,        // power series at 0
  Pfaff,         // (1-z)^-a F(a, c-b; c; z/(z-1))
  OneMinusZ,     // connection formula around z = 1
  Inverse,       // connection formula around z = oo
  Continuation,  // Taylor re-expansion of the ODE from a point of the direct disk
};

constexpr std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Direct: return "direct";
    case Strategy::Pfaff: return "pfaff";
    case Strategy::OneMinusZ: return "one-minus-z";
    case Strategy::Inverse: return "inverse";
    case Strategy::Continuation: return "continuation";
  }
  return "unknown";
}

/// Region radius for the direct series and its images under the
/// transformations.
inline constexpr double series_radius = 0.6;
inline constexpr double inverse_radius = 1.4;

namespace detail {

/// Principal branch base^e for complex e.
inline Complex cpow(Complex base, Complex e) {
  if (base == Complex{}) {
    if (e.real() > 0.0) return 0.0;
    if (e == Complex{}) return 1.0;
    throw Error(ErrorKind::PoleError, "zero raised to a power with non-positive real part");
  }
  return std::exp(e * Complex(std::log(std::abs(base)), principal_arg(base)));
}

inline bool near_integer(Complex x) {
  return std::abs(x.imag()) < 1e-12 && std::abs(x.real() - std::round(x.real())) < 1e-12;
}

inline Complex series(const HypParams& p, Complex z, const Tolerances& tol) {
  if (!(std::abs(z) < 1.0))
    throw Error(ErrorKind::UnreachableRegion, "power series needs |z| < 1");
  Complex sum = 1.0, term = 1.0;
  int small_terms = 0;
  for (int n = 0; n < tol.max_series_terms; ++n) {
    const double dn = n;
    term *= (p.a + dn) * (p.b + dn) / ((dn + 1.0) * (p.c + dn)) * z;
    sum += term;
    if (term == Complex{}) return sum;  // terminating series
    if (std::abs(term) <= tol.series_tol * std::abs(sum)) {
      if (++small_terms == 2) return sum;
    } else {
      small_terms = 0;
    }
  }
  throw Error(ErrorKind::SeriesDivergence,
              "2F1 series not converged after " + std::to_string(tol.max_series_terms) + " terms");
}

inline Complex pfaff(const HypParams& p, Complex z, const Tolerances& tol) {
  if (z == Complex{1.0}) throw Error(ErrorKind::UnreachableRegion, "Pfaff transformation is singular at z = 1");
  const Complex w = z / (z - 1.0);
  return cpow(1.0 - z, -p.a) * series({p.a, p.c - p.b, p.c}, w, tol);
}

inline Complex one_minus_z(const HypParams& p, Complex z, const Tolerances& tol) {
  const Complex cab = p.c - p.a - p.b;
  if (near_integer(cab))
    throw Error(ErrorKind::UnreachableRegion, "1-z connection formula needs non-integer c-a-b");
  const Complex w = 1.0 - z;
  const Complex g1 = tgamma(p.c) * tgamma(cab) * rgamma(p.c - p.a) * rgamma(p.c - p.b);
  const Complex g2 = tgamma(p.c) * tgamma(-cab) * rgamma(p.a) * rgamma(p.b);
  Complex out = g1 * series({p.a, p.b, 1.0 - cab}, w, tol);
  if (g2 != Complex{}) out += g2 * cpow(w, cab) * series({p.c - p.a, p.c - p.b, 1.0 + cab}, w, tol);
  return out;
}

inline Complex inverse(const HypParams& p, Complex z, const Tolerances& tol) {
  const Complex amb = p.a - p.b;
  if (near_integer(amb))
    throw Error(ErrorKind::UnreachableRegion, "1/z connection formula needs non-integer a-b");
  if (z == Complex{}) throw Error(ErrorKind::UnreachableRegion, "1/z connection formula is singular at z = 0");
  const Complex w = 1.0 / z;
  const Complex g1 = tgamma(p.c) * tgamma(-amb) * rgamma(p.b) * rgamma(p.c - p.a);
  const Complex g2 = tgamma(p.c) * tgamma(amb) * rgamma(p.a) * rgamma(p.c - p.b);
  Complex out{};
  if (g1 != Complex{})
    out += g1 * cpow(-z, -p.a) * series({p.a, p.a - p.c + 1.0, amb + 1.0}, w, tol);
  if (g2 != Complex{})
    out += g2 * cpow(-z, -p.b) * series({p.b, p.b - p.c + 1.0, 1.0 - amb}, w, tol);
  return out;
}

/// Analytic continuation along the ray from 0.5 z/|z| to z, re-expanding
/// the hypergeometric ODE in Taylor series at each step. Every step stays
/// within half the distance to the nearest singular point {0, 1}.
inline Complex continuation(const HypParams& p, Complex z, const Tolerances& tol) {
  const double rz = std::abs(z);
  if (rz <= 0.5) return series(p, z, tol);
  if (std::abs(1.0 - z) < 1e-10) throw Error(ErrorKind::UnreachableRegion, "continuation cannot end at z = 1");
  const Complex dir = z / rz;
  Complex x = 0.5 * dir;
  Complex f = series(p, x, tol);
  Complex df = p.a * p.b / p.c * series({p.a + 1.0, p.b + 1.0, p.c + 1.0}, x, tol);

  const Complex B1 = -(p.a + p.b + 1.0), C0 = -p.a * p.b;
  constexpr int max_steps = 100000;
  for (int step = 0; step < max_steps; ++step) {
    const Complex remaining = z - x;
    if (std::abs(remaining) == 0.0) return f;
    const double dist = std::min(std::abs(x), std::abs(1.0 - x));
    if (dist < 1e-10) throw Error(ErrorKind::UnreachableRegion, "continuation path runs into a singular point");
    const double len = std::min(std::abs(remaining), 0.5 * dist);
    const Complex h = len == std::abs(remaining) ? remaining : dir * len;

    const Complex A0 = x * (1.0 - x), A1 = 1.0 - 2.0 * x;
    const Complex B0 = p.c - (p.a + p.b + 1.0) * x;
    // c_{n+2} from the ODE z(1-z)F'' + [c-(a+b+1)z]F' - abF = 0 at x + h
    Complex cn = f, cn1 = df;
    Complex sum = cn + cn1 * h, dsum = cn1;
    Complex hn = h;  // h^(n+1) for the coefficient cn1
    int small_terms = 0;
    bool converged = false;
    for (int n = 0; n < tol.max_series_terms; ++n) {
      const double dn = n;
      const Complex cn2 =
          -((A1 * dn + B0) * (dn + 1.0) * cn1 + (-dn * (dn - 1.0) + B1 * dn + C0) * cn) /
          (A0 * (dn + 2.0) * (dn + 1.0));
      const Complex dterm = (dn + 2.0) * cn2 * hn;
      hn *= h;
      const Complex term = cn2 * hn;
      sum += term;
      dsum += dterm;
      cn = cn1;
      cn1 = cn2;
      if (std::abs(term) <= tol.series_tol * std::abs(sum) &&
          std::abs(dterm) <= tol.series_tol * std::abs(dsum)) {
        if (++small_terms == 2) {
          converged = true;
          break;
        }
      } else {
        small_terms = 0;
      }
    }
    if (!converged) throw Error(ErrorKind::SeriesDivergence, "Taylor re-expansion did not converge");
    f = sum;
    df = dsum;
    x += h;
    if (len == std::abs(remaining)) return f;
  }
  throw Error(ErrorKind::UnreachableRegion, "continuation exceeded its step budget");
}

}  // namespace detail

/// The strategy gauss_2f1 uses for z when left to choose.
inline Strategy select_strategy(const HypParams& p, Complex z) {
  if (std::abs(z) <= series_radius) return Strategy::Direct;
  if (z != Complex{1.0} && std::abs(z / (z - 1.0)) <= series_radius) return Strategy::Pfaff;
  if (std::abs(1.0 - z) <= series_radius && !detail::near_integer(p.c - p.a - p.b))
    return Strategy::OneMinusZ;
  if (std::abs(z) >= inverse_radius && !detail::near_integer(p.a - p.b)) return Strategy::Inverse;
  return Strategy::Continuation;
}

/// 2F1(a, b; c; z) on the principal branch (cut along [1, oo); on the cut
/// the sign of Im z decides the side, with +0 treated as the lower side).
inline Complex gauss_2f1(const HypParams& p, Complex z, Strategy strategy,
                         const Tolerances& tol = {}) {
  p.validate();
  require_finite(z, "2F1 argument");
  if (strategy == Strategy::Auto) strategy = select_strategy(p, z);
  Complex value;
  switch (strategy) {
    case Strategy::Direct: value = detail::series(p, z, tol); break;
    case Strategy::Pfaff: value = detail::pfaff(p, z, tol); break;
    case Strategy::OneMinusZ: value = detail::one_minus_z(p, z, tol); break;
    case Strategy::Inverse: value = detail::inverse(p, z, tol); break;
    case Strategy::Continuation: value = detail::continuation(p, z, tol); break;
    case Strategy::Auto: break;
  }
  return require_finite(value, "2F1 value");
}

inline Complex gauss_2f1(const HypParams& p, Complex z, const Tolerances& tol = {}) {
  return gauss_2f1(p, z, Strategy::Auto, tol);
}

/// phi1(x) = 1728 x (x^2 - 11x - 1)^5 / (1 - 228x + 494x^2 + 228x^3 + x^4)^3.
inline Complex phi1(Complex x, const Tolerances& tol = {}) {
  require_finite(x, "phi1 argument");
  const Complex u = x * x - 11.0 * x - 1.0;
  const Complex d = 1.0 + x * (-228.0 + x * (494.0 + x * (228.0 + x)));
  const Complex d3 = d * d * d;
  if (std::abs(d3) <= tol.degeneracy_tol) throw Error(ErrorKind::PoleError, "phi1 denominator vanishes");
  const Complex u2 = u * u;
  return 1728.0 * x * u2 * u2 * u / d3;
}

/// Radius within which identity_residuals() accepts arguments.
inline constexpr double identity_radius = 0.05;

/// Normalized defects of the two algebraic transformations
///   F(11/60, 31/60; 6/5; phi1(x)) = D^(11/20) / (1 + 11x - x^2)
///   F(-1/60, 19/60; 4/5; phi1(x)) = D^(-1/20)
/// with D = 1 - 228x + 494x^2 + 228x^3 + x^4 and principal powers.
inline std::pair<double, double> identity_residuals(Complex x, const Tolerances& tol = {}) {
  if (std::abs(x) > identity_radius)
    throw Error(ErrorKind::RangeError, "identity check restricted to |x| <= 0.05");
  const Complex z = phi1(x, tol);
  const Complex d = 1.0 + x * (-228.0 + x * (494.0 + x * (228.0 + x)));
  const Complex rhs1 = principal_pow(d, 11.0 / 20.0) / (1.0 + 11.0 * x - x * x);
  const Complex rhs2 = principal_pow(d, -1.0 / 20.0);
  const Complex lhs1 = gauss_2f1(numerator_params, z, tol);
  const Complex lhs2 = gauss_2f1(denominator_params, z, tol);
  return {relative_error(lhs1, rhs1), relative_error(lhs2, rhs2)};
}

namespace detail {

inline void check_J(Complex J, const Tolerances& tol) {
  require_finite(J, "J");
  if (std::abs(J) < tol.degeneracy_tol)
    throw Error(ErrorKind::NearSingularJ, "J is at the branch point 0");
  if (std::abs(J - 1.0) < tol.degeneracy_tol)
    throw Error(ErrorKind::NearSingularJ, "J is at the branch point 1");
}

inline std::pair<Complex, Complex> icosahedral_pair(Complex J, const Tolerances& tol) {
  check_J(J, tol);
  const Complex w = 1.0 / J;
  const Complex num = gauss_2f1(numerator_params, w, tol);
  const Complex den = gauss_2f1(denominator_params, w, tol);
  if (den == Complex{}) throw Error(ErrorKind::PoleError, "denominator hypergeometric function vanishes");
  return {num, den};
}

}  // namespace detail

/// s(J) = F(11/60, 31/60; 6/5; 1/J) / (J^(1/5) F(-1/60, 19/60; 4/5; 1/J)).
inline Complex s_of_J(Complex J, const Tolerances& tol = {}) {
  auto [num, den] = detail::icosahedral_pair(J, tol);
  return num / (principal_nth_root(J, 5) * den);
}

/// Solution of the icosahedral equation H^3(Y,1) / (1728 f^5(Y,1)) = J:
/// Y = F(11/60, 31/60; 6/5; 1/J) / (5th-root(1728 J) F(-1/60, 19/60; 4/5; 1/J)).
inline Complex Y_of_J(Complex J, const Tolerances& tol = {}) {
  auto [num, den] = detail::icosahedral_pair(J, tol);
  return num / (principal_nth_root(1728.0 * J, 5) * den);
}

/// Central-difference defect of the hypergeometric equation
///   J(1-J) z'' + [c - (a+b+1) J] z' - ab z = 0,  a = 11/60, b = -1/60, c = 2/3
/// for z(J) = J^(-11/60) F(11/60, 31/60; 6/5; 1/J), divided by the sum of the
/// moduli of the three terms.
inline double ode_residual(Complex J, double h, const Tolerances& tol = {}) {
  if (!(h >= 1e-4 && h <= 1e-2)) throw Error(ErrorKind::InvalidArgument, "step h must lie in [1e-4, 1e-2]");
  require_finite(J, "J");
  if (std::abs(J) < 10 * h || std::abs(J - 1.0) < 10 * h)
    throw Error(ErrorKind::InvalidArgument, "J must stay 10h away from the singular points 0 and 1");
  const HypParams& ode = icosahedral_ode_params;
  auto zfun = [&](Complex x) {
    return detail::cpow(x, -ode.a) * gauss_2f1(numerator_params, 1.0 / x, tol);
  };
  const Complex zm = zfun(J - h), z0 = zfun(J), zp = zfun(J + h);
  const Complex d1 = (zp - zm) / (2.0 * h);
  const Complex d2 = (zp - 2.0 * z0 + zm) / (h * h);
  const Complex t2 = J * (1.0 - J) * d2;
  const Complex t1 = (ode.c - (ode.a + ode.b + 1.0) * J) * d1;
  const Complex t0 = -ode.a * ode.b * z0;
  const double scale = std::abs(t2) + std::abs(t1) + std::abs(t0);
  return std::abs(t2 + t1 + t0) / std::max(scale, 1e-300);
}

}  // namespace icosolve

#endif  // ICOSOLVE_HYPERGEO_HPP
