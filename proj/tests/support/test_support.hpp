#ifndef ICOSOLVE_TEST_SUPPORT_HPP
#define ICOSOLVE_TEST_SUPPORT_HPP

#include <complex>
#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "icosolve/icosolve.hpp"

namespace icosolve::testing {

// The worked example: y^5 + 5i y^2 - 12 y + (1 - i).
inline const PrincipalQuintic worked_example{{0.0, 1.0}, {-2.4, 0.0}, {1.0, -1.0}};

// Values as printed to six significant digits.
struct Printed {
  Complex r{-0.140712, -1.06363};
  Complex s{0.816914, -0.0478157};
  Complex p{0.749812, -0.413396};
  Complex q{0.0671022, 0.365581};
  Complex J{-0.324158, -2.04659};
  Complex Y{0.178352, 0.0718131};
  Complex f{-0.178721, -0.0713975};
  std::array<Complex, 5> t{Complex{0.509555, -0.278001}, Complex{-0.761539, 0.997924},
                           Complex{0.372515, -1.14707}, Complex{0.240993, 1.27692},
                           Complex{-0.361523, -0.849771}};
  std::array<Complex, 5> y{Complex{0.0895118, -0.0828539}, Complex{-0.0120031, 2.20094},
                           Complex{-0.0430531, -1.43083}, Complex{-1.90456, -0.333135},
                           Complex{1.87011, -0.354121}};
};
inline const Printed printed{};

inline ::testing::AssertionResult near(Complex got, Complex want, double tol) {
  const double d = std::abs(got - want);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << format_complex(got) << ", want " << format_complex(want)
                                       << ", |diff| = " << d << " > " << tol;
}

inline ::testing::AssertionResult rel_near(Complex got, Complex want, double tol) {
  const double e = relative_error(got, want);
  if (e <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << format_complex(got) << ", want " << format_complex(want)
                                       << ", relative error " << e << " > " << tol;
}

template <typename F>
::testing::AssertionResult throws_kind(F&& f, ErrorKind kind) {
  try {
    std::invoke(std::forward<F>(f));
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << to_string(e.kind()) << ": " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw " << to_string(kind);
}

// Draws principal quintics with coefficients in |c| <= radius, skipping
// near-degenerate triples.
inline PrincipalQuintic random_principal(Sampler& rng, double radius = 2.0) {
  for (;;) {
    PrincipalQuintic pq{rng.in_disk(radius), rng.in_disk(radius), rng.in_disk(radius)};
    const Complex a = pq.alpha, b = pq.beta, g = pq.gamma;
    if (std::abs(g) <= 1e-3 || std::abs(b) <= 1e-3) continue;
    if (std::abs(a * a * a * a + a * b * g - b * b * b) <= 1e-6) continue;
    if (std::abs(discriminant(pq)) <= 1e-6) continue;
    return pq;
  }
}

}  // namespace icosolve::testing

#endif  // ICOSOLVE_TEST_SUPPORT_HPP
