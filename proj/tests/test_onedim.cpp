#include <gtest/gtest.h>

#include "projstar/ambient.hpp"
#include "projstar/onedim.hpp"
#include "projstar/random.hpp"
#include "projstar/starprod.hpp"

using namespace projstar;

namespace {

WeightedFunction1D wf(const Rat& sigma, const char* u) { return {sigma, parse_poly(u)}; }

Poly random_u(RandomSource& rs, int deg) { return rs.base_poly(1, deg, 4); }

}  // namespace

TEST(RankinCohen, FirstBracketOfModularWeights) {
  // Weights 4 and 6: [f, g]_1 = 4 f g' - 6 f' g.
  auto r = rc_bracket(wf(-4, "x1^2"), wf(-6, "x1"), 1);
  EXPECT_EQ(r.u, parse_poly("-8*x1^2"));
  EXPECT_EQ(r.sigma, Rat(-12));
}

TEST(RankinCohen, SecondBracketMatchesClassicalFormula) {
  // [f, g]_2 = binom(k1+1, 2) f g'' - (k1+1)(k2+1) f' g' + binom(k2+1, 2) f'' g.
  RandomSource rs(50);
  for (int k1 : {2, 4, 5})
    for (int k2 : {1, 3}) {
      Poly f = random_u(rs, 5), g = random_u(rs, 5);
      Poly expected = binomial(Rat(k1 + 1), 2) * f * derivative_1d(g, 2) -
                      Rat((k1 + 1) * (k2 + 1)) * derivative_1d(f, 1) * derivative_1d(g, 1) +
                      binomial(Rat(k2 + 1), 2) * derivative_1d(f, 2) * g;
      EXPECT_EQ(rc_bracket({Rat(-k1), f}, {Rat(-k2), g}, 2).u, expected) << k1 << " " << k2;
    }
}

TEST(RankinCohen, GradedSkewSymmetry) {
  RandomSource rs(51);
  for (int k = 0; k <= 4; ++k) {
    WeightedFunction1D a{make_rat(-7, 2), random_u(rs, 6)}, b{Rat(3), random_u(rs, 6)};
    Poly ab = rc_bracket(a, b, k).u, ba = rc_bracket(b, a, k).u;
    EXPECT_EQ(ba, k % 2 ? -ab : ab) << k;
  }
}

TEST(Lift1D, AgreesWithAmbientLift) {
  RandomSource rs(52);
  for (int k = 1; k <= 4; ++k) {
    const Rat sigma = make_rat(11, 3);
    WeightedFunction1D u{sigma, random_u(rs, 6)};
    auto comps = lift_1d(u, k);
    ASSERT_EQ(static_cast<int>(comps.size()), k + 1);
    AmbientSymTensor lift = invariant_lift(SymTensorField(1, k, sigma - 2 * k, mul_var(u.u, var::z(0), k)), Connection(1));
    for (int m = 0; m <= k; ++m)
      EXPECT_EQ(lift.component(k - m).body, mul_var(comps[m], var::z(0), k - m)) << "k=" << k << " m=" << m;
  }
}

TEST(Lift1D, NormalizedComponents) {
  RandomSource rs(53);
  const int k = 3;
  WeightedFunction1D u{make_rat(5, 2), random_u(rs, 5)};
  auto plain = lift_1d(u, k), norm = lift_1d_normalized(u, k);
  Rat scale = binomial(u.sigma, k);
  if (k % 2) scale = -scale;
  for (int m = 0; m <= k; ++m) EXPECT_EQ(norm[m], plain[m] * scale) << m;
}

TEST(Lift1D, ExcludedWeights) {
  EXPECT_TRUE(is_excluded_1d(Rat(0), 1));
  EXPECT_TRUE(is_excluded_1d(Rat(2), 3));
  EXPECT_FALSE(is_excluded_1d(Rat(3), 3));
  EXPECT_FALSE(is_excluded_1d(make_rat(1, 2), 3));
}

TEST(StarOneDim, AgreesWithEngine) {
  RandomSource rs(54);
  const Poly mu = Poly::variable(var::kMu);
  for (int k = 1; k <= 3; ++k) {
    WeightedFunction1D u1{Rat(2 * k), random_u(rs, 5)}, u2{Rat(0), random_u(rs, 5)};
    auto S = star_one_dim(u1, u2, mu);
    auto E = star_product(mul_var(u1.u, var::z(0), k), u2.u, mu, Connection(1));
    ASSERT_EQ(S.size(), E.size());
    for (int s = 0; s <= k; ++s) EXPECT_EQ(mul_var(S[s], var::z(0), k - s), E[s]) << k << " " << s;
  }
}

TEST(Cmz, LeadingCoefficientAndReflection) {
  for (int r = 0; r <= 3; ++r)
    EXPECT_EQ(cmz_t(r, make_rat(1, 3), Rat(2), Rat(1)), cmz_t(r, Rat(-2) - make_rat(1, 3), Rat(2), Rat(1))) << r;
  EXPECT_EQ(cmz_t(0, Rat(5), Rat(2), Rat(3)), Rat(1));
  EXPECT_EQ(cmz_t_infinity(0, Rat(2), Rat(3)), Rat(1));
}

TEST(Cmz, InfinityProductHasOnlyEvenTerms) {
  RandomSource rs(55);
  WeightedFunction1D u1{Rat(4), random_u(rs, 6)}, u2{Rat(2), random_u(rs, 6)};
  auto m = cmz_infinity_product(u1, u2, 4);
  for (std::size_t r = 1; r < m.size(); r += 2) EXPECT_TRUE(m[r].u.is_zero()) << r;
  EXPECT_EQ(m[0].u, u1.u * u2.u);
}

TEST(Cmz, AssociativeAtMinusOneHalf) {
  // Every coefficient reduces to (-1/4)^r here.
  RandomSource rs(56);
  for (const Rat& mu : {make_rat(-1, 2)}) {
    std::vector<std::vector<Graded1D>> u;
    for (int j = 0; j < 3; ++j) u.push_back({{WeightedFunction1D{Rat(2 * (1 + j)), random_u(rs, 6)}}});
    auto left = cmz_mu_product(cmz_mu_product(u[0], u[1], mu, 3), u[2], mu, 3);
    auto right = cmz_mu_product(u[0], cmz_mu_product(u[1], u[2], mu, 3), mu, 3);
    EXPECT_EQ(left, right) << to_string(mu);
  }
}

TEST(StarInfinityOneDim, RealPartMatchesCmzAtFourI) {
  for (int k = 0; k <= 4; ++k) {
    auto r = infinity_correspondence(k, GaussRat{0, 4});
    EXPECT_TRUE(r.real_part_matches) << k;
    EXPECT_TRUE(r.odd_imaginary) << k;
  }
}

TEST(Gauss, Arithmetic) {
  EXPECT_EQ(gauss_pow(GaussRat{0, 2}, 2), (GaussRat{-4, 0}));
  EXPECT_EQ(GaussRat({1, 1}) * GaussRat({1, -1}), (GaussRat{2, 0}));
}
