#include <gtest/gtest.h>

#include "../support/test_support.hpp"

using namespace icosolve;
using icosolve::testing::near;
using icosolve::testing::rel_near;
using icosolve::testing::throws_kind;

namespace {

GeneralQuintic random_general(Sampler& rng, double radius = 2.0) {
  return {rng.in_disk(radius), rng.in_disk(radius), rng.in_disk(radius), rng.in_disk(radius),
          rng.in_disk(radius)};
}

std::vector<Complex> oracle_roots(const std::array<Complex, 6>& c) { return aberth_roots(c).values; }

}  // namespace

TEST(Depress, NoQuarticTermIsUnchanged) {
  const GeneralQuintic g{0.0, {1.0, 2.0}, -3.0, {0.0, 0.5}, 7.0};
  const Depressed d = depress(g);
  EXPECT_EQ(d.shift, Complex(0.0));
  EXPECT_EQ(d.quintic.p, g.c3);
  EXPECT_EQ(d.quintic.q, g.c2);
  EXPECT_EQ(d.quintic.r_coef, g.c1);
  EXPECT_EQ(d.quintic.s_coef, g.c0);
}

TEST(Depress, ExpandsShiftedPolynomial) {
  // (z-1)^5 + 5(z-1)^4 = z^5 - 10 z^3 + 20 z^2 - 15 z + 4
  const Depressed d = depress({5.0, 0.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(d.shift, Complex(1.0));
  EXPECT_TRUE(near(d.quintic.p, -10.0, 1e-13));
  EXPECT_TRUE(near(d.quintic.q, 20.0, 1e-13));
  EXPECT_TRUE(near(d.quintic.r_coef, -15.0, 1e-13));
  EXPECT_TRUE(near(d.quintic.s_coef, 4.0, 1e-13));
}

TEST(Depress, RandomQuinticsTranslateRoots) {
  Sampler rng(21);
  for (int k = 0; k < 100; ++k) {
    const GeneralQuintic g = random_general(rng);
    const Depressed d = depress(g);
    // the quartic coefficient of the shifted polynomial is c4 - 5 shift
    EXPECT_LT(std::abs(g.c4 - 5.0 * d.shift), 1e-14);
    auto xs = oracle_roots(g.coefficients());
    for (auto& x : xs) x += d.shift;
    EXPECT_LT(match_root_sets(xs, oracle_roots(d.quintic.coefficients())), 1e-8);
  }
}

TEST(PowerSums, NewtonIdentitiesRoundTrip) {
  const std::vector<Complex> roots{1.0, {0.0, 2.0}, -0.5, {1.0, -1.0}, 3.0};
  const auto c = poly::from_roots(roots);
  std::array<Complex, 6> coeffs{};
  std::copy(c.begin(), c.end(), coeffs.begin());
  const auto s = detail::power_sums(coeffs, 8);
  for (std::size_t k = 0; k <= 8; ++k) {
    Complex direct{};
    for (Complex r : roots) direct += std::pow(r, int(k));
    EXPECT_TRUE(rel_near(s[k], direct, 1e-12)) << "k=" << k;
  }
  const auto back = detail::coefficients_from_power_sums(s);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_TRUE(rel_near(back[k], coeffs[k], 1e-12));
}

TEST(Principalize, IdentityMapWhenAlreadyPrincipal) {
  const DepressedQuintic d{0.0, 0.0, {2.0, -1.0}, 3.0};
  const Principalized pr = principalize(d);
  EXPECT_TRUE(pr.record.identity_map);
  EXPECT_EQ(pr.quintic.alpha, Complex(0.0));
  EXPECT_EQ(pr.quintic.beta, Complex(2.0, -1.0) / 5.0);
  EXPECT_EQ(pr.quintic.gamma, Complex(3.0));
}

TEST(Principalize, ShiftedExampleRootsMapToPrincipalRoots) {
  const DepressedQuintic d = depress({5.0, 0.0, 0.0, 0.0, 0.0}).quintic;
  const Principalized pr = principalize(d);
  ASSERT_FALSE(pr.record.identity_map);
  // exact roots (z-1)^4 (z+4), and the oracle's approximation of them
  const std::vector<Complex> exact{1.0, 1.0, 1.0, 1.0, -4.0};
  for (const auto& zs : {exact, oracle_roots(d.coefficients())}) {
    for (Complex z : zs) {
      const Complex y = z * z - pr.record.a * z - pr.record.b;
      EXPECT_LT(std::abs(pr.quintic(y)) / pr.quintic.scale(), 1e-8) << format_complex(z);
    }
  }
}

TEST(Principalize, TransformedPowerSumsVanish) {
  Sampler rng(22);
  for (int k = 0; k < 100; ++k) {
    const DepressedQuintic d = depress(random_general(rng)).quintic;
    if (std::abs(d.p) <= 1e-3) continue;
    for (int branch : {1, -1}) {
      const Principalized pr = principalize(d, {}, branch);
      const auto& rec = pr.record;
      // a solves a^2 - (3q/p) a - (3p/5 - 2r/p) = 0 and b = -2p/5
      const Complex resid = rec.a * rec.a - 3.0 * d.q / d.p * rec.a - (3.0 * d.p / 5.0 - 2.0 * d.r_coef / d.p);
      EXPECT_LT(std::abs(resid) / std::max(1.0, std::norm(rec.a)), 1e-10);
      EXPECT_TRUE(rel_near(rec.delta * rec.delta, delta_squared(d), 1e-12));
      EXPECT_TRUE(near(rec.b, -2.0 * d.p / 5.0, 1e-15));
      Complex s1{}, s2{};
      double m1 = 0.0, m2 = 0.0;
      for (Complex z : oracle_roots(d.coefficients())) {
        const Complex y = z * z - rec.a * z - rec.b;
        s1 += y;
        s2 += y * y;
        m1 += std::abs(y);
        m2 += std::norm(y);
        EXPECT_LT(std::abs(pr.quintic(y)) / pr.quintic.scale(), 1e-8);
      }
      EXPECT_LT(std::abs(s1), 1e-9 * std::max(1.0, m1));
      EXPECT_LT(std::abs(s2), 1e-9 * std::max(1.0, m2));
    }
  }
}

TEST(Principalize, DeltaSquaredFormula) {
  Sampler rng(23);
  for (int k = 0; k < 50; ++k) {
    const DepressedQuintic d{rng.in_annulus(0.5, 2.0), rng.in_disk(2.0), rng.in_disk(2.0), rng.in_disk(2.0)};
    const Complex want = 9.0 * d.q * d.q / (4.0 * d.p * d.p) + 3.0 * d.p / 5.0 - 2.0 * d.r_coef / d.p;
    EXPECT_TRUE(rel_near(delta_squared(d), want, 1e-14));
  }
}

TEST(Principalize, RejectsBadBranchAndNonFinite) {
  EXPECT_TRUE(throws_kind([] { principalize({1.0, 1.0, 1.0, 1.0}, {}, 0); }, ErrorKind::InvalidArgument));
  EXPECT_TRUE(throws_kind([] { principalize({1.0, std::nan(""), 1.0, 1.0}); }, ErrorKind::NonFinite));
}

TEST(Principalize, TinyPKeepsTheSmallRootAccurate) {
  // |p| just above the identity threshold: one choice of a is ~1e11 and
  // the other must not be lost to cancellation
  const DepressedQuintic d{1e-11, 1.0, 1.0, 1.0};
  const auto pr = principalize(d, {}, -1);
  EXPECT_LT(std::abs(pr.record.a), 10.0);
  EXPECT_LT(std::abs(pr.quintic.alpha), 10.0);
  const GeneralQuintic g{0.0, 1e-11, 1.0, 1.0, 1.0};
  const auto sol = solve_general(g);
  EXPECT_LT(match_root_sets(sol.roots, aberth_roots(g.coefficients()).values), 1e-8);
}

TEST(LiftRoots, SquareRootLiftSelectsTheRoot) {
  // a = b = 0: y = z^2; z = 2 is a root of d and z = -2 is not
  const std::vector<Complex> zs{2.0, {0.0, 1.0}, {-1.0, 0.5}, {0.3, -2.0}, {-1.3, 0.5}};
  const auto c = poly::from_roots(zs);
  ASSERT_LT(std::abs(c[1]), 1e-14);
  const DepressedQuintic d{c[2], c[3], c[4], c[5]};
  TschirnhausRecord rec;
  std::array<Complex, 5> ys{};
  for (std::size_t i = 0; i < 5; ++i) ys[i] = zs[i] * zs[i];
  EXPECT_EQ(ys[0], Complex(4.0));
  const auto xs = lift_roots(rec, ys, d);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(near(xs[i], zs[i], 1e-12));
}

TEST(LiftRoots, CollisionWhenTwoValuesShareAPreimage) {
  // 2 and -2 both square to 4: both lifts pick the same z
  const std::vector<Complex> zs{2.0, -2.0, 1.0, {-1.0, 1.0}, {0.0, -1.0}};
  const auto c = poly::from_roots(zs);
  const DepressedQuintic d{c[2], c[3], c[4], c[5]};
  std::array<Complex, 5> ys{};
  for (std::size_t i = 0; i < 5; ++i) ys[i] = zs[i] * zs[i];
  EXPECT_TRUE(throws_kind([&] { lift_roots({}, ys, d); }, ErrorKind::LiftCollision));
}

TEST(LiftRoots, AmbiguityWhenNoPreimageIsARoot) {
  const DepressedQuintic d{0.0, 0.0, 0.0, -1.0};  // z^5 = 1
  std::array<Complex, 5> ys{};
  for (int k = 0; k < 5; ++k) ys[k] = std::pow(unity_root5(k), 2);
  ys[3] = 7.0;
  EXPECT_TRUE(throws_kind([&] { lift_roots({}, ys, d); }, ErrorKind::LiftAmbiguity));
}

TEST(LiftRoots, ShiftOnlyTranslatesExactly) {
  const DepressedQuintic d{0.0, 0.0, 0.0, -1.0};
  TschirnhausRecord rec;
  rec.identity_map = true;
  rec.shift = 1.0;
  std::array<Complex, 5> ys{};
  for (int k = 0; k < 5; ++k) ys[k] = unity_root5(k);
  const auto xs = lift_roots(rec, ys, d);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(xs[k], ys[k] - 1.0);
}

TEST(LiftRoots, ChainReproducesOracleRoots) {
  Sampler rng(24);
  int done = 0;
  while (done < 100) {
    const GeneralQuintic g = random_general(rng);
    const Depressed dep = depress(g);
    if (std::abs(dep.quintic.p) <= 1e-3) continue;
    ++done;
    Principalized pr = principalize(dep.quintic);
    pr.record.shift = dep.shift;
    // principal roots from the oracle, so this isolates the reduction
    const auto yv = oracle_roots(pr.quintic.coefficients());
    std::array<Complex, 5> ys{};
    std::copy(yv.begin(), yv.end(), ys.begin());
    const auto xs = lift_roots(pr.record, ys, dep.quintic);
    EXPECT_LT(match_root_sets(xs, oracle_roots(g.coefficients())), 1e-6);
    for (Complex x : xs) EXPECT_LT(std::abs(g(x)), 1e-8 * g.scale());
  }
}

TEST(Discriminant, CollapsedCases) {
  EXPECT_EQ(discriminant({0.0, 0.0, 2.0}), Complex(50000.0));
  EXPECT_EQ(discriminant({0.0, -1.0, 0.0}), Complex(-800000.0));
}

TEST(Discriminant, VanishesForRepeatedRoots) {
  // y^5 + 5 alpha y^2 + 5 beta y + gamma with a double root: pick the roots
  // {t, t, u, v, w} with power sums 1 and 2 equal to zero
  const Complex t{0.4, 0.3}, u{-0.1, 0.9};
  // remaining pair (v, w): v + w = -(2t + u), v^2 + w^2 = -(2t^2 + u^2)
  const Complex sum = -(2.0 * t + u), sq = -(2.0 * t * t + u * u);
  const Complex prod = (sum * sum - sq) / 2.0;
  const Complex disc = principal_sqrt(sum * sum - 4.0 * prod);
  const std::vector<Complex> roots{t, t, u, (sum + disc) / 2.0, (sum - disc) / 2.0};
  const auto c = poly::from_roots(roots);
  ASSERT_LT(std::abs(c[1]) + std::abs(c[2]), 1e-14);
  const PrincipalQuintic pq{c[3] / 5.0, c[4] / 5.0, c[5]};
  EXPECT_LT(std::abs(reduced_discriminant(pq)), 1e-13 * reduced_discriminant_magnitude(pq));
}

TEST(Discriminant, CentralQuadraticDiscriminantCarriesBetaSquared) {
  // B^2 - 4AC of the quadratic in 12r equals beta^2 times reduced_discriminant
  Sampler rng(25);
  for (int k = 0; k < 100; ++k) {
    const PrincipalQuintic pq{rng.in_disk(2.0), rng.in_disk(2.0), rng.in_disk(2.0)};
    const Complex qd = central_quadratic(pq.alpha, pq.beta, pq.gamma).discriminant();
    const Complex want = pq.beta * pq.beta * reduced_discriminant(pq);
    EXPECT_LT(std::abs(qd - want) / std::abs(want), 1e-10);
  }
}
