#include <gtest/gtest.h>

#include "../support/test_support.hpp"

using namespace icosolve;

TEST(Poly, HornerAndDerivative) {
  const std::vector<Complex> c{1.0, 0.0, -2.0, 3.0};  // x^3 - 2x + 3
  const Complex x{1.5, -0.5};
  auto [p, dp] = poly::horner_with_derivative(c, x);
  EXPECT_EQ(p, poly::horner(c, x));
  EXPECT_LT(std::abs(p - (x * x * x - 2.0 * x + 3.0)), 1e-14);
  EXPECT_LT(std::abs(dp - (3.0 * x * x - 2.0)), 1e-14);
  EXPECT_DOUBLE_EQ(poly::horner_magnitude(c, Complex(2.0)), 8.0 + 4.0 + 3.0);
}

TEST(Poly, FromRootsAndMultiply) {
  const std::vector<Complex> roots{1.0, 2.0, {0.0, 1.0}};
  const auto c = poly::from_roots(roots);
  ASSERT_EQ(c.size(), 4u);
  for (Complex r : roots) EXPECT_LT(std::abs(poly::horner(c, r)), 1e-14);
  const auto prod = poly::multiply(std::vector<Complex>{1.0, -1.0}, std::vector<Complex>{1.0, 1.0});
  ASSERT_EQ(prod.size(), 3u);
  EXPECT_EQ(prod[0], Complex(1.0));
  EXPECT_EQ(prod[1], Complex(0.0));
  EXPECT_EQ(prod[2], Complex(-1.0));
}
