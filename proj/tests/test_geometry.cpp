#include <gtest/gtest.h>

#include "projstar/geometry.hpp"
#include "projstar/random.hpp"
#include "projstar/tensor.hpp"

using namespace projstar;

namespace {

Connection sample_connection(int n) {
  std::vector<Poly> g(n * n * n);
  auto set = [&](int i, int j, int k, const char* s) {
    g[(i * n + j) * n + k] = parse_poly(s);
    g[(j * n + i) * n + k] = parse_poly(s);
  };
  set(0, 0, 1, "x1*x2 + 1");
  set(0, 1, 0, "x2^2");
  set(1, 1, 1, "x1 - 2*x2");
  return Connection(n, remove_trace(n, g));
}

}  // namespace

TEST(Curvature, ConventionFromCommutator) {
  // 2 nabla_[i nabla_j] alpha_k = -R_ijk^p alpha_p on a generic covector.
  const int n = 2;
  Connection conn = sample_connection(n);
  Tensor alpha = covariant_from_symbol(n, 1, parse_poly("x2^2*z1 + (x1 - x1*x2)*z2"));
  Tensor dd = nabla(nabla(alpha, conn), conn);
  const auto& R = conn.curvature();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly rhs;
        for (int p = 0; p < n; ++p) rhs -= R.r(i, j, k, p) * alpha.at({p});
        EXPECT_EQ(dd.at({i, j, k}) - dd.at({j, i, k}), rhs) << i << j << k;
      }
}

TEST(Curvature, RicciIsTraceOfRiemann) {
  Connection conn = sample_connection(2);
  const auto& C = conn.curvature();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Poly tr;
      for (int p = 0; p < 2; ++p) tr += C.r(i, p, j, p);
      EXPECT_EQ(C.ric(i, j), tr);
    }
}

TEST(Curvature, FlatIsZeroAndBianchiHolds) {
  Connection flat(3);
  for (const auto& p : flat.curvature().R) EXPECT_TRUE(p.is_zero());
  RandomSource rs(11);
  for (int n : {2, 3})
    for (const auto& id : bianchi_check(rs.trace_free_connection(n, 2))) EXPECT_TRUE(id.holds) << id.name;
}

TEST(Curvature, TwoDimensionalWeylVanishes) {
  RandomSource rs(5);
  Connection conn = rs.trace_free_connection(2, 2);
  for (const auto& p : conn.curvature().B) EXPECT_TRUE(p.is_zero());
}

TEST(Curvature, ProjectiveChangeOfFlatIsProjectivelyFlat) {
  RandomSource rs(8);
  Connection c = projective_change(Connection(3), rs.exact_covector(3, 2));
  for (const auto& p : c.curvature().B) EXPECT_TRUE(p.is_zero());
  for (const auto& p : c.curvature().C) EXPECT_TRUE(p.is_zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(c.curvature().ric(i, j), c.curvature().ric(j, i));
}

TEST(Brackets, PoissonBracketOfVectorsIsLieBracket) {
  // [x2 d1, x1 d2] = x2 d2 - x1 d1.
  EXPECT_EQ(poisson_bracket(parse_poly("x2*z1"), parse_poly("x1*z2")), parse_poly("x2*z2 - x1*z1"));
  EXPECT_EQ(poisson_bracket(parse_poly("z1"), parse_poly("x1^2")), parse_poly("2*x1"));
}

TEST(Brackets, SchoutenIgnoresTheConnection) {
  RandomSource rs(2);
  Connection conn = rs.trace_free_connection(2, 1);
  SymTensorField a = rs.field(2, 2, 0, 2), b = rs.field(2, 1, 0, 2);
  EXPECT_EQ(schouten_bracket(a, b, conn).body, poisson_bracket(a.body, b.body));
}

TEST(Divergence, FlatDivergenceIsTrace) {
  SymTensorField a(2, 1, 0, parse_poly("x1^2*z1 + x1*x2*z2"));
  EXPECT_EQ(divergence(a, Connection(2)).body, parse_poly("3*x1"));
  SymTensorField b(2, 2, 0, parse_poly("x1^2*z1^2 + x2*z1*z2"));
  // a^{11} = x1^2, a^{12} = x2/2: div^i = d_p a^{ip} gives (2 x1 + 1/2) z1.
  EXPECT_EQ(divergence(b, Connection(2)).body, parse_poly("2*x1*z1 + 1/2*z1"));
}

TEST(Divergence, CurvedMatchesContractedDerivative) {
  RandomSource rs(4);
  Connection conn = rs.trace_free_connection(3, 2);
  SymTensorField a = rs.field(3, 2, make_rat(1, 2), 2);
  Tensor t = contract(nabla(to_tensor(a), conn), 0, 2);
  EXPECT_EQ(sym_field(t, a.weight), divergence(a, conn));
}

TEST(Automorphisms, ProjectiveVectorFields) {
  Connection flat(2);
  EXPECT_TRUE(is_projective_automorphism(parse_poly("x1^2*z1 + x1*x2*z2"), flat));
  EXPECT_TRUE(is_projective_automorphism(parse_poly("x2*z1 + z2"), flat));
  EXPECT_FALSE(is_projective_automorphism(parse_poly("x1^2*z2"), flat));
}

TEST(Forms, ExactForm) {
  auto g = exact_form(2, parse_poly("x1^2*x2"));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], parse_poly("2*x1*x2"));
  EXPECT_EQ(g[1], parse_poly("x1^2"));
}
