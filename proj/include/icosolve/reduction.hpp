#ifndef ICOSOLVE_REDUCTION_HPP
#define ICOSOLVE_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace icosolve {

/// Monic x^5 + c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
struct GeneralQuintic {
  Complex c4, c3, c2, c1, c0;

  std::array<Complex, 6> coefficients() const { return {1.0, c4, c3, c2, c1, c0}; }
  Complex operator()(Complex x) const { return poly::horner(coefficients(), x); }
  double scale() const {
    return std::max({1.0, std::abs(c4), std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  }
};

/// z^5 + p z^3 + q z^2 + r z + s.
struct DepressedQuintic {
  Complex p, q, r_coef, s_coef;

  std::array<Complex, 6> coefficients() const { return {1.0, 0.0, p, q, r_coef, s_coef}; }
  Complex operator()(Complex z) const { return poly::horner(coefficients(), z); }
  double scale() const {
    return std::max({1.0, std::abs(p), std::abs(q), std::abs(r_coef), std::abs(s_coef)});
  }
};

/// y^5 + 5 alpha y^2 + 5 beta y + gamma.
struct PrincipalQuintic {
  Complex alpha, beta, gamma;

  std::array<Complex, 6> coefficients() const {
    return {1.0, 0.0, 0.0, 5.0 * alpha, 5.0 * beta, gamma};
  }
  Complex operator()(Complex y) const { return poly::horner(coefficients(), y); }
  /// max(1, |alpha|, |beta|, |gamma|), the normalization of all residual gates.
  double scale() const {
    return std::max({1.0, std::abs(alpha), std::abs(beta), std::abs(gamma)});
  }
};

/// Everything needed to map roots of the principal form back to the
/// original quintic: x = z - shift, y = z^2 - a z - b.
struct TschirnhausRecord {
  Complex shift;
  Complex a;
  Complex b;
  Complex delta;
  int delta_branch = 1;  // a = 3q/(2p) + delta_branch * delta
  bool identity_map = false;  // p == 0: the depressed form is already principal
};

struct Depressed {
  DepressedQuintic quintic;
  Complex shift;  // z = x + shift
};

struct Principalized {
  PrincipalQuintic quintic;
  TschirnhausRecord record;
};

/// Removes the quartic term with z = x + c4/5.
inline Depressed depress(const GeneralQuintic& g) {
  const Complex shift = g.c4 / 5.0;
  // Taylor shift: coefficients of g(z - shift)
  auto c = g.coefficients();
  const Complex t = -shift;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 1; j < 6 - i; ++j) c[j] += t * c[j - 1];
  return {DepressedQuintic{c[2], c[3], c[4], c[5]}, shift};
}

namespace detail {

/// Power sums S_0..S_kmax of the roots of a monic polynomial given highest
/// degree first, by Newton's identities.
template <std::size_t N>
std::vector<Complex> power_sums(const std::array<Complex, N>& coeffs, std::size_t kmax) {
  constexpr std::size_t deg = N - 1;
  std::vector<Complex> s(kmax + 1);
  s[0] = double(deg);
  for (std::size_t k = 1; k <= kmax; ++k) {
    Complex acc{};
    for (std::size_t i = 1; i <= std::min(k - 1, deg); ++i) acc += coeffs[i] * s[k - i];
    if (k <= deg) acc += double(k) * coeffs[k];
    s[k] = -acc;
  }
  return s;
}

/// Inverse of power_sums for a monic quintic: returns {1, d1, ..., d5}.
inline std::array<Complex, 6> coefficients_from_power_sums(const std::vector<Complex>& s) {
  std::array<Complex, 6> d{1.0};
  for (std::size_t k = 1; k <= 5; ++k) {
    Complex acc = s[k];
    for (std::size_t i = 1; i < k; ++i) acc += d[i] * s[k - i];
    d[k] = -acc / double(k);
  }
  return d;
}

}  // namespace detail

/// delta^2 = 9q^2/(4p^2) + 3p/5 - 2r/p.
inline Complex delta_squared(const DepressedQuintic& d) {
  return 9.0 * d.q * d.q / (4.0 * d.p * d.p) + 3.0 * d.p / 5.0 - 2.0 * d.r_coef / d.p;
}

/// Quadratic Tschirnhaus transformation y = z^2 - a z - b onto the principal
/// form. The image coefficients come from power sums (no roots of d are
/// computed). With p == 0 the input is already principal and the identity
/// map is used.
inline Principalized principalize(const DepressedQuintic& d, const Tolerances& tol = {},
                                  int delta_branch = 1) {
  if (delta_branch != 1 && delta_branch != -1)
    throw Error(ErrorKind::InvalidArgument, "delta_branch must be +1 or -1");
  for (Complex c : d.coefficients()) require_finite(c, "depressed coefficient");

  TschirnhausRecord rec;
  rec.delta_branch = delta_branch;
  if (std::abs(d.p) <= tol.degeneracy_tol) {
    rec.identity_map = true;
    return {PrincipalQuintic{d.q / 5.0, d.r_coef / 5.0, d.s_coef}, rec};
  }

  rec.b = -2.0 * d.p / 5.0;
  rec.delta = principal_sqrt(delta_squared(d));
  // a is a root of a^2 - (3q/p) a + (2r/p - 3p/5); the smaller one is taken
  // from the product, since 3q/(2p) -/+ delta cancels badly when p is small
  const Complex half_sum = 3.0 * d.q / (2.0 * d.p);
  const Complex plus = half_sum + rec.delta, minus = half_sum - rec.delta;
  const bool plus_big = std::abs(plus) >= std::abs(minus);
  const Complex big = plus_big ? plus : minus;
  const Complex small = big == Complex{} ? Complex{} : (2.0 * d.r_coef / d.p - 3.0 * d.p / 5.0) / big;
  rec.a = (delta_branch == 1) == plus_big ? big : small;
  if (!is_finite(rec.a) || !is_finite(rec.b))
    throw Error(ErrorKind::DegenerateReduction, "Tschirnhaus parameters overflow (|p| too small)");

  const auto sz = detail::power_sums(d.coefficients(), 10);
  const std::vector<Complex> base{1.0, -rec.a, -rec.b};

  std::vector<Complex> py(6);
  std::array<double, 6> magnitude{};
  py[0] = 5.0;
  std::vector<Complex> power{1.0};
  for (std::size_t k = 1; k <= 5; ++k) {
    power = poly::multiply(power, base);
    const std::size_t deg = 2 * k;
    Complex acc{};
    double mag = 0.0;
    for (std::size_t i = 0; i <= deg; ++i) {
      Complex term = power[i] * sz[deg - i];
      acc += term;
      mag += std::abs(term);
    }
    py[k] = acc;
    magnitude[k] = mag;
  }

  // The whole point of a and b is that the first two power sums vanish.
  for (std::size_t k = 1; k <= 2; ++k) {
    double m = std::max(1.0, magnitude[k]);
    if (std::abs(py[k]) > tol.residual_tol * m)
      throw Error(ErrorKind::DegenerateReduction,
                  "power sum " + std::to_string(k) + " of the transformed roots does not vanish");
    py[k] = 0.0;
  }

  const auto c = detail::coefficients_from_power_sums(py);
  return {PrincipalQuintic{c[3] / 5.0, c[4] / 5.0, c[5]}, rec};
}

/// Maps roots of the principal form back to roots of the original quintic.
/// Each y has two preimages z; the one that is a root of d wins.
inline std::array<Complex, 5> lift_roots(const TschirnhausRecord& rec,
                                         const std::array<Complex, 5>& principal_roots,
                                         const DepressedQuintic& d, const Tolerances& tol = {}) {
  const double threshold = tol.residual_tol * d.scale();
  std::array<Complex, 5> zs{};
  for (std::size_t i = 0; i < 5; ++i) {
    const Complex y = principal_roots[i];
    if (rec.identity_map) {
      zs[i] = y;
      continue;
    }
    // z^2 - a z - (b + y) = 0, larger root first then Vieta for the other
    const Complex c0 = -(rec.b + y);
    const Complex sq = principal_sqrt(rec.a * rec.a - 4.0 * c0);
    const Complex plus = rec.a + sq, minus = rec.a - sq;
    Complex z1 = (std::abs(plus) >= std::abs(minus) ? plus : minus) / 2.0;
    Complex z2 = z1 == Complex{} ? Complex{} : c0 / z1;
    const double r1 = std::abs(d(z1)), r2 = std::abs(d(z2));
    if (r1 >= threshold && r2 >= threshold)
      throw Error(ErrorKind::LiftAmbiguity,
                  "neither preimage of y=" + format_complex(y) + " is a root of the depressed quintic");
    zs[i] = r1 <= r2 ? z1 : z2;
  }

  // a complete root multiset reproduces the depressed coefficients
  const auto rebuilt = poly::from_roots(zs);
  const auto want = d.coefficients();
  for (std::size_t k = 0; k < 6; ++k) {
    if (std::abs(rebuilt[k] - want[k]) > 1e-6 * d.scale())
      throw Error(ErrorKind::LiftCollision, "lifted values do not form the root set of the depressed quintic");
  }

  std::array<Complex, 5> xs{};
  for (std::size_t i = 0; i < 5; ++i) xs[i] = zs[i] - rec.shift;
  return xs;
}

/// 108 a^5 g - 135 a^4 b^2 + 90 a^2 b g^2 - 320 a b^3 g + 256 b^5 + g^4,
/// i.e. the discriminant divided by 3125.
inline Complex reduced_discriminant(const PrincipalQuintic& pq) {
  const Complex a = pq.alpha, b = pq.beta, g = pq.gamma;
  const Complex a2 = a * a, b2 = b * b, g2 = g * g;
  return 108.0 * a2 * a2 * a * g - 135.0 * a2 * a2 * b2 + 90.0 * a2 * b * g2 -
         320.0 * a * b2 * b * g + 256.0 * b2 * b2 * b + g2 * g2;
}

/// Sum of the moduli of the six terms of reduced_discriminant().
inline double reduced_discriminant_magnitude(const PrincipalQuintic& pq) {
  const double a = std::abs(pq.alpha), b = std::abs(pq.beta), g = std::abs(pq.gamma);
  return 108 * std::pow(a, 5) * g + 135 * std::pow(a, 4) * b * b + 90 * a * a * b * g * g +
         320 * a * std::pow(b, 3) * g + 256 * std::pow(b, 5) + std::pow(g, 4);
}

inline Complex discriminant(const PrincipalQuintic& pq) { return 3125.0 * reduced_discriminant(pq); }

}  // namespace icosolve

#endif  // ICOSOLVE_REDUCTION_HPP
