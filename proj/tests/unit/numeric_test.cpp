#include <gtest/gtest.h>

#include <limits>

#include "../support/test_support.hpp"

using namespace icosolve;
using icosolve::testing::near;
using icosolve::testing::throws_kind;

TEST(PrincipalRoot, IdentityAndSquareRootOfMinusOne) {
  EXPECT_EQ(principal_nth_root(1.0, 5), Complex(1.0));
  EXPECT_TRUE(near(principal_nth_root(-1.0, 2), {0.0, 1.0}, 1e-16));
  // -1 - 0i sits on the cut; the principal argument is +pi either way
  EXPECT_TRUE(near(principal_nth_root(Complex(-1.0, -0.0), 2), {0.0, 1.0}, 1e-16));
}

TEST(PrincipalRoot, FifthRootOf32i) {
  const Complex w = principal_nth_root({0.0, 32.0}, 5);
  EXPECT_TRUE(near(w, std::polar(2.0, pi / 10), 1e-15));
  EXPECT_TRUE(near(w, {1.902113032590307, 0.618033988749895}, 1e-14));
  EXPECT_TRUE(near(w * w * w * w * w, {0.0, 32.0}, 1e-13));
}

TEST(PrincipalRoot, ZeroAndErrors) {
  EXPECT_EQ(principal_nth_root(0.0, 3), Complex(0.0));
  EXPECT_TRUE(throws_kind([] { principal_nth_root(1.0, 0); }, ErrorKind::InvalidArgument));
  EXPECT_TRUE(throws_kind([] { principal_nth_root({std::nan(""), 0.0}, 2); }, ErrorKind::NonFinite));
  EXPECT_TRUE(throws_kind([] { principal_nth_root({std::numeric_limits<double>::infinity(), 0.0}, 2); },
                          ErrorKind::NonFinite));
}

TEST(PrincipalRoot, PowerReproducesRadicandProperty) {
  Sampler rng(1);
  for (int k = 0; k < 2000; ++k) {
    const Complex z = rng.log_annulus(1e-6, 1e6);
    for (int n : {2, 3, 5}) {
      const Complex w = principal_nth_root(z, n);
      const double arg = std::arg(w);
      EXPECT_LE(std::abs(arg), pi / n + 1e-15);
      EXPECT_LT(std::abs(std::pow(w, n) - z) / std::abs(z), 1e-14) << format_complex(z) << " n=" << n;
    }
  }
}

TEST(PrincipalArg, RangeIsHalfOpen) {
  EXPECT_DOUBLE_EQ(principal_arg({-2.0, 0.0}), pi);
  EXPECT_DOUBLE_EQ(principal_arg({-2.0, -0.0}), pi);
  EXPECT_DOUBLE_EQ(principal_arg({0.0, -1.0}), -pi / 2);
}

TEST(ParseComplex, Literals) {
  EXPECT_EQ(parse_complex("1-i"), Complex(1.0, -1.0));
  EXPECT_EQ(parse_complex("-2.4"), Complex(-2.4, 0.0));
  EXPECT_EQ(parse_complex("3.1e-2i"), Complex(0.0, 0.031));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("+2+0.5i"), Complex(2.0, 0.5));
  EXPECT_EQ(parse_complex(" 1e3-2E-1i "), Complex(1000.0, -0.2));
  EXPECT_EQ(parse_complex(".5"), Complex(0.5, 0.0));
}

TEST(ParseComplex, ErrorsCarryColumn) {
  auto column_of = [](std::string_view text) -> std::size_t {
    try {
      parse_complex(text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      return e.column();
    }
    ADD_FAILURE() << "no parse error for '" << text << "'";
    return 0;
  };
  EXPECT_EQ(column_of(""), 1u);
  EXPECT_EQ(column_of("abc"), 1u);
  EXPECT_EQ(column_of("1+"), 3u);
  EXPECT_EQ(column_of("1+2"), 4u);
  EXPECT_EQ(column_of("1e"), 3u);
  EXPECT_EQ(column_of("2i3"), 3u);
  EXPECT_EQ(column_of("1.5x"), 4u);
}

TEST(ParseComplex, RoundTripsFormatter) {
  Sampler rng(7);
  for (int k = 0; k < 5000; ++k) {
    const Complex z = rng.log_annulus(1e-300, 1e300);
    const std::string text = format_complex(z);
    const Complex back = parse_complex(text);
    EXPECT_EQ(back.real(), z.real()) << text;
    EXPECT_EQ(back.imag(), z.imag()) << text;
    EXPECT_EQ(format_complex(back), text);
  }
  for (Complex z : {Complex(0.0, 0.0), Complex(-0.0, -0.0), Complex(1.0, -1.0), Complex(5e-324, 1.7976931348623157e308)}) {
    const Complex back = parse_complex(format_complex(z));
    EXPECT_EQ(std::signbit(back.real()), std::signbit(z.real()));
    EXPECT_EQ(std::signbit(back.imag()), std::signbit(z.imag()));
    EXPECT_EQ(back, z);
  }
}

TEST(Tolerances, ValidateRejectsNonPositive) {
  Tolerances t;
  EXPECT_NO_THROW(t.validate());
  t.residual_tol = 0.0;
  EXPECT_TRUE(throws_kind([&] { t.validate(); }, ErrorKind::InvalidArgument));
  t = {};
  t.max_series_terms = 0;
  EXPECT_TRUE(throws_kind([&] { t.validate(); }, ErrorKind::InvalidArgument));
  t = {};
  t.series_tol = std::nan("");
  EXPECT_TRUE(throws_kind([&] { t.validate(); }, ErrorKind::InvalidArgument));
}

TEST(Gamma, KnownValuesAndReflection) {
  EXPECT_TRUE(icosolve::testing::rel_near(tgamma(Complex(5.0)), 24.0, 1e-13));
  EXPECT_TRUE(icosolve::testing::rel_near(tgamma(Complex(0.5)), std::sqrt(pi), 1e-14));
  EXPECT_TRUE(icosolve::testing::rel_near(tgamma(Complex(-0.5)), -2.0 * std::sqrt(pi), 1e-14));
  // |Gamma(i)|^2 = pi / sinh(pi)
  EXPECT_NEAR(std::norm(tgamma(Complex(0.0, 1.0))), pi / std::sinh(pi), 1e-14);
  EXPECT_TRUE(throws_kind([] { tgamma(Complex(-2.0)); }, ErrorKind::PoleError));
  EXPECT_EQ(rgamma(-3.0), Complex(0.0));
  Sampler rng(3);
  for (int k = 0; k < 200; ++k) {
    const Complex z = rng.in_disk(4.0) + 0.1;
    // Gamma(z+1) = z Gamma(z)
    EXPECT_LT(std::abs(tgamma(z + 1.0) - z * tgamma(z)) / std::abs(tgamma(z + 1.0)), 1e-13) << format_complex(z);
  }
}
