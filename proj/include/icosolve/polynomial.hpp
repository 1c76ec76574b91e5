#ifndef ICOSOLVE_POLYNOMIAL_HPP
#define ICOSOLVE_POLYNOMIAL_HPP

#include <complex>
#include <ranges>
#include <utility>
#include <vector>

namespace icosolve::poly {

// Coefficient ranges are ordered highest degree first: {1, c4, c3, c2, c1, c0}
// is x^5 + c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0.

template <std::ranges::input_range R, typename T>
std::complex<T> horner(const R& coeffs, std::complex<T> x) {
  std::complex<T> acc{};
  for (const auto& c : coeffs) acc = acc * x + std::complex<T>(c);
  return acc;
}

/// Value and first derivative in one pass.
template <std::ranges::input_range R, typename T>
std::pair<std::complex<T>, std::complex<T>> horner_with_derivative(const R& coeffs,
                                                                   std::complex<T> x) {
  std::complex<T> p{}, dp{};
  for (const auto& c : coeffs) {
    dp = dp * x + p;
    p = p * x + std::complex<T>(c);
  }
  return {p, dp};
}

/// Sum of |c_k| |x|^k, the scale of rounding noise in horner().
template <std::ranges::input_range R, typename T>
T horner_magnitude(const R& coeffs, std::complex<T> x) {
  T acc = 0, ax = std::abs(x);
  for (const auto& c : coeffs) acc = acc * ax + std::abs(std::complex<T>(c));
  return acc;
}

/// Monic polynomial with the given roots.
template <std::ranges::input_range R>
auto from_roots(const R& roots) {
  using C = std::ranges::range_value_t<R>;
  std::vector<C> out{C(1)};
  for (const auto& r : roots) {
    out.push_back(C{});
    for (std::size_t k = out.size() - 1; k > 0; --k) out[k] -= r * out[k - 1];
  }
  return out;
}

template <typename C>
std::vector<C> multiply(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace icosolve::poly

#endif  // ICOSOLVE_POLYNOMIAL_HPP
