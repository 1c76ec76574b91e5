#ifndef ICOSOLVE_ORACLE_HPP
#define ICOSOLVE_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace icosolve {

/// Output of the simultaneous root-finder.
template <typename T = double>
struct BasicRootSet {
  std::vector<std::complex<T>> values;
  std::vector<T> corrections;  // size of the last update of each root
  int iterations = 0;
  bool converged = false;
};

using RootSet = BasicRootSet<double>;

/// Thrown with the partial iterate when the iteration budget runs out.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(RootSet partial)
      : Error(ErrorKind::NoConvergence,
              "Aberth iteration did not converge in " + std::to_string(partial.iterations) + " iterations"),
        partial_(std::move(partial)) {}

  const RootSet& partial() const noexcept { return partial_; }

 private:
  RootSet partial_;
};

inline constexpr int aberth_max_iterations = 200;

/// All roots of a monic polynomial (coefficients highest degree first) by
/// Aberth-Ehrlich simultaneous iteration.
///
/// Start: the circle of radius 1 + max|c_i| with a fixed irrational angular
/// offset. Stop: every correction below 1e-14 * radius, or every residual at
/// the level of evaluation rounding (this is what ends the iteration on
/// multiple roots, which converge only linearly).
template <typename T>
BasicRootSet<T> aberth_roots(std::span<const std::complex<T>> coeffs) {
  using C = std::complex<T>;
  if (coeffs.size() < 2) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be at least 1");
  if (coeffs[0] != C(1)) throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
  for (const C& c : coeffs) require_finite(Complex(c), "polynomial coefficient");

  const std::size_t n = coeffs.size() - 1;
  T cmax = 0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) cmax = std::max(cmax, std::abs(coeffs[i]));
  const T radius = 1 + cmax;
  const T offset = T(0.5) * (std::sqrt(T(5)) - 1);  // golden-ratio angle, irrational
  const T eps = std::numeric_limits<T>::epsilon();

  BasicRootSet<T> out;
  out.values.resize(n);
  out.corrections.assign(n, radius);
  for (std::size_t k = 0; k < n; ++k)
    out.values[k] = std::polar(radius, T(2 * pi) * T(k) / T(n) + offset);

  auto& z = out.values;
  for (int it = 1; it <= aberth_max_iterations; ++it) {
    out.iterations = it;
    T max_corr = 0;
    bool all_at_noise = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto [p, dp] = poly::horner_with_derivative(coeffs, z[k]);
      const T noise = 8 * T(n) * eps * poly::horner_magnitude(coeffs, z[k]);
      if (std::abs(p) > noise) all_at_noise = false;
      if (p == C{}) {
        out.corrections[k] = 0;
        continue;
      }
      const C ratio = p / dp;
      C repulsion{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += C(1) / (z[k] - z[j]);
      const C w = ratio / (C(1) - ratio * repulsion);
      z[k] -= w;
      out.corrections[k] = std::abs(w);
      max_corr = std::max(max_corr, std::abs(w));
    }
    if (max_corr < T(1e-14) * radius || all_at_noise) {
      out.converged = true;
      return out;
    }
  }
  if constexpr (std::is_same_v<T, double>) throw NoConvergenceError(out);
  throw Error(ErrorKind::NoConvergence, "Aberth iteration did not converge");
}

template <std::size_t N>
RootSet aberth_roots(const std::array<Complex, N>& coeffs) {
  return aberth_roots(std::span<const Complex>(coeffs));
}

inline RootSet aberth_roots(const std::vector<Complex>& coeffs) {
  return aberth_roots(std::span<const Complex>(coeffs));
}

namespace detail {

// Kuhn's augmenting path for a bipartite matching restricted to pairs with
// distance <= limit.
inline bool augment(std::size_t u, const std::vector<std::vector<double>>& dist, double limit,
                    std::vector<int>& match_b, std::vector<char>& seen) {
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (seen[v] || dist[u][v] > limit) continue;
    seen[v] = 1;
    if (match_b[v] < 0 || augment(std::size_t(match_b[v]), dist, limit, match_b, seen)) {
      match_b[v] = int(u);
      return true;
    }
  }
  return false;
}

inline bool perfect_matching(const std::vector<std::vector<double>>& dist, double limit) {
  const std::size_t n = dist.size();
  std::vector<int> match_b(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (!augment(u, dist, limit, match_b, seen)) return false;
  }
  return true;
}

}  // namespace detail

/// Minimum over bijections a <-> b of the largest paired distance
/// (bottleneck assignment). Zero for permutations of the same list.
inline double match_root_sets(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "root lists differ in length");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  std::vector<double> candidates;
  candidates.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = std::abs(a[i] - b[j]);
      candidates.push_back(dist[i][j]);
    }
  std::sort(candidates.begin(), candidates.end());
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (detail::perfect_matching(dist, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace icosolve

#endif  // ICOSOLVE_ORACLE_HPP
