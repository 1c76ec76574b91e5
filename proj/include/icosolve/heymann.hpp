#ifndef ICOSOLVE_HEYMANN_HPP
#define ICOSOLVE_HEYMANN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "reduction.hpp"

namespace icosolve {

/// The parameter chain from principal coefficients to the icosahedral
/// parameter. r = (p-q)^2 and s = p+q; h1, h2 are the Heymann parameters.
struct ResolventData {
  Complex r, s, p, q, h1, h2, J;
};

/// Coefficients of the central quadratic in u = 12r:
///   lead u^2 - linear u + constant = 0.
struct CentralQuadratic {
  Complex lead, linear, constant;

  Complex discriminant() const { return linear * linear - 4.0 * lead * constant; }
};

inline CentralQuadratic central_quadratic(Complex alpha, Complex beta, Complex gamma) {
  const Complex a = alpha, b = beta, g = gamma;
  const Complex a2 = a * a;
  const Complex m = a * g - 8.0 * b * b;
  return {a2 * a2 + a * b * g - b * b * b, 2.0 * a2 * a * g + 11.0 * a2 * b * b + b * g * g, m * m};
}

/// Roots r of the central quadratic. Two roots normally, larger modulus
/// first; one root when the leading coefficient vanishes (then the equation
/// is linear, as happens for Euler-form coefficients).
inline std::vector<Complex> resolvent_r(Complex alpha, Complex beta, Complex gamma,
                                        const Tolerances& tol = {}) {
  const auto quad = central_quadratic(alpha, beta, gamma);
  const double scale = std::max({1.0, std::abs(quad.linear), std::abs(quad.constant)});
  if (std::abs(quad.lead) <= tol.degeneracy_tol * scale) {
    if (std::abs(quad.linear) <= tol.degeneracy_tol * std::max(1.0, std::abs(quad.constant)))
      throw Error(ErrorKind::DegenerateCoefficients, "central quadratic degenerates to a constant");
    return {quad.constant / quad.linear / 12.0};
  }
  const Complex root = principal_sqrt(quad.discriminant());
  const Complex plus = quad.linear + root, minus = quad.linear - root;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == Complex{}) return {0.0, 0.0};
  const Complex u1 = big / (2.0 * quad.lead);
  const Complex u2 = quad.constant / (quad.lead * u1);
  return {u1 / 12.0, u2 / 12.0};
}

/// s from 12 alpha r + 6 beta s - gamma = 0.
inline Complex s_from_r(Complex alpha, Complex beta, Complex gamma, Complex r,
                        const Tolerances& tol = {}) {
  if (std::abs(beta) <= tol.degeneracy_tol)
    throw Error(ErrorKind::DegenerateCoefficients, "beta vanishes; s is undetermined");
  return (gamma - 12.0 * alpha * r) / (6.0 * beta);
}

/// p = (s + sigma sqrt(r)) / 2, q = (s - sigma sqrt(r)) / 2.
inline std::pair<Complex, Complex> pq_from_rs(Complex r, Complex s, int sqrt_sign = 1) {
  if (sqrt_sign != 1 && sqrt_sign != -1)
    throw Error(ErrorKind::InvalidArgument, "sqrt_sign must be +1 or -1");
  const Complex root = double(sqrt_sign) * principal_sqrt(r);
  return {(s + root) / 2.0, (s - root) / 2.0};
}

/// h1 = -9(s+R)^3 R / (6 alpha (s+3R) - 8 beta),
/// h2 = 9(s-R)^3 R / (6 alpha (s-3R) - 8 beta),   with R = p - q.
/// h1 + h2 = 1 certifies that (p, q) came from a root of the central
/// quadratic with a consistent square root.
inline std::pair<Complex, Complex> h_params(Complex p, Complex q, Complex alpha, Complex beta,
                                            Complex r, Complex s, const Tolerances& tol = {}) {
  const Complex root = p - q;
  if (std::abs(root * root - r) > 1e-8 * std::max(1.0, std::abs(r)) ||
      std::abs(p + q - s) > 1e-8 * std::max(1.0, std::abs(s)))
    throw Error(ErrorKind::BranchInconsistency, "(p, q) does not match (r, s)");
  const Complex den1 = 6.0 * alpha * (s + 3.0 * root) - 8.0 * beta;
  const Complex den2 = 6.0 * alpha * (s - 3.0 * root) - 8.0 * beta;
  if (std::abs(den1) <= tol.degeneracy_tol || std::abs(den2) <= tol.degeneracy_tol)
    throw Error(ErrorKind::DegenerateCoefficients, "Heymann parameter denominator vanishes");
  const Complex sp = s + root, sm = s - root;
  const Complex h1 = -9.0 * sp * sp * sp * root / den1;
  const Complex h2 = 9.0 * sm * sm * sm * root / den2;
  if (std::abs(h1 + h2 - 1.0) > 1e-6)
    throw Error(ErrorKind::BranchInconsistency, "h1 + h2 = " + format_complex(h1 + h2) + ", expected 1");
  return {h1, h2};
}

/// J = 4 h1 h2 = 4 * 432 beta p^3 q^3 / (12 (alpha gamma - beta^2) r - gamma^2).
inline Complex J_param(Complex p, Complex q, Complex alpha, Complex beta, Complex gamma, Complex r,
                       const Tolerances& tol = {}) {
  const Complex den = 12.0 * (alpha * gamma - beta * beta) * r - gamma * gamma;
  if (std::abs(den) <= tol.degeneracy_tol)
    throw Error(ErrorKind::DegenerateCoefficients, "denominator of h1 h2 vanishes");
  const Complex pq = p * q;
  return 4.0 * 432.0 * beta * pq * pq * pq / den;
}

/// (p, q, h1, h2) -> (alpha, beta, gamma): the coefficients for which
/// y = p eta1 + q eta2 solves the principal quintic.
inline PrincipalQuintic forward_map(Complex p, Complex q, Complex h1, Complex h2) {
  if (h1 == Complex{} || h2 == Complex{})
    throw Error(ErrorKind::DegenerateCoefficients, "forward map needs nonzero h1 and h2");
  const Complex u = p * p * p / h1, v = q * q * q / h2;
  return {-2.0 * (u + v), 3.0 * (u * (p - 2.0 * q) - v * (2.0 * p - q)),
          -6.0 * (u * (p * p - 5.0 * p * q + 10.0 * q * q) + v * (10.0 * p * p - 5.0 * p * q + q * q))};
}

/// Coefficients (M, N, P, Q, R) of M eta1^2 + N eta2^2 + P eta1 + Q eta2 + R,
/// the result of substituting y = p eta1 + q eta2 into the principal quintic.
inline std::array<Complex, 5> simultaneous_resolvent(Complex p, Complex q, Complex h1, Complex h2,
                                                     Complex alpha, Complex beta, Complex gamma) {
  const Complex hh = h1 * h2;
  const Complex p2 = p * p, q2 = q * q;
  const Complex p3 = p2 * p, q3 = q2 * q;
  const Complex p4 = p2 * p2, q4 = q2 * q2;
  const Complex M = 5.0 * p2 * (2.0 * h2 * p3 + 2.0 * h1 * q3 + alpha * hh);
  const Complex N = 5.0 * q2 * (2.0 * h1 * q3 + 2.0 * h2 * p3 + alpha * hh);
  const Complex P = 5.0 * p *
                    (-3.0 * h2 * p4 + 10.0 * h2 * p3 * q + 6.0 * h1 * p * q3 + h1 * q4 +
                     2.0 * alpha * hh * q + beta * hh);
  const Complex Q = 5.0 * q *
                    (-3.0 * h1 * q4 + 10.0 * h1 * q3 * p + 6.0 * h2 * q * p3 + h2 * p4 +
                     2.0 * alpha * hh * p + beta * hh);
  const Complex R = 6.0 * (h2 * p4 * p - 5.0 * h2 * p4 * q + 10.0 * h2 * q2 * p3 +
                           10.0 * h1 * p2 * q3 - 5.0 * h1 * p * q4 + h1 * q4 * q) +
                    gamma * hh;
  return {M, N, P, Q, R};
}

/// h eta^5 - 10 eta^2 + 15 eta - 6.
inline Complex eta_resolvent(Complex h, Complex eta) {
  const Complex e2 = eta * eta;
  return h * e2 * e2 * eta - 10.0 * e2 + 15.0 * eta - 6.0;
}

/// Full chain for one root of the central quadratic, sigma = +1.
inline ResolventData resolvent_chain(const PrincipalQuintic& pq, Complex r, const Tolerances& tol = {}) {
  ResolventData d;
  d.r = r;
  d.s = s_from_r(pq.alpha, pq.beta, pq.gamma, r, tol);
  std::tie(d.p, d.q) = pq_from_rs(d.r, d.s, 1);
  std::tie(d.h1, d.h2) = h_params(d.p, d.q, pq.alpha, pq.beta, d.r, d.s, tol);
  d.J = J_param(d.p, d.q, pq.alpha, pq.beta, pq.gamma, d.r, tol);
  if (relative_error(d.J, 4.0 * d.h1 * d.h2) > 1e-6)
    throw Error(ErrorKind::BranchInconsistency, "J from the product relation disagrees with 4 h1 h2");
  return d;
}

}  // namespace icosolve

#endif  // ICOSOLVE_HEYMANN_HPP
