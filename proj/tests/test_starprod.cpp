#include <gtest/gtest.h>

#include "golden_forms.hpp"
#include "projstar/geometry.hpp"
#include "projstar/random.hpp"
#include "projstar/starprod.hpp"
#include "projstar/suites.hpp"

using namespace projstar;

namespace {

Poly sum_all(const std::vector<Poly>& v) {
  Poly s;
  for (const auto& p : v) s += p;
  return s;
}

}  // namespace

TEST(Star, UnitAndConstants) {
  const Poly mu = Poly::variable(var::kMu);
  auto B = star_product(Poly(1), Poly(1), mu, Connection(2));
  ASSERT_EQ(B.size(), 1u);
  EXPECT_EQ(B[0], Poly(1));
  Poly a = parse_poly("x1*z1*z2 + z2");
  auto left = star_product(Poly(1), a, mu, golden::curved(2));
  EXPECT_EQ(sum_all(left), a);
  EXPECT_EQ(left[0], a);
}

TEST(Star, ClosedForms) {
  for (int n : {2, 3}) {
    RandomSource rs(80 + n);
    for (auto* form : {golden::vector_star_formal, golden::vector_star_symmetric, golden::tensor_function_star,
                       golden::vector_star_infinity}) {
      auto o = form(n, rs);
      EXPECT_TRUE(o.ok) << o.failure;
    }
  }
}

TEST(Star, FirstOrderIsHalfTheBracketPlusSymmetric) {
  RandomSource rs(31);
  Connection conn = golden::curved(2);
  const Poly mu(make_rat(2, 5));
  Poly a = rs.symbol(2, 1, 2), b = rs.symbol(2, 2, 2);
  auto ab = star_product(a, b, mu, conn), ba = star_product(b, a, mu, conn);
  EXPECT_EQ(ab[0], a * b);
  EXPECT_EQ(ab[1] - ba[1], poisson_bracket(a, b));
}

TEST(Star, ParityDualityAtFormalWeight) {
  RandomSource rs(32);
  const int n = 2;
  const Poly mu = Poly::variable(var::kMu);
  Connection conn = rs.trace_free_connection(n, 1);
  Poly a = rs.symbol(n, 2, 1), b = rs.symbol(n, 1, 1);
  auto B = star_product(a, b, mu, conn), Bs = star_product(b, a, mu, conn);
  ASSERT_EQ(B.size(), Bs.size());
  for (std::size_t r = 0; r < B.size(); ++r) {
    Poly dual = substitute(Bs[r], var::kMu, -mu - Poly(n + 1));
    EXPECT_EQ(B[r], r % 2 ? -dual : dual) << r;
  }
}

TEST(Star, QuantizationRoundTrip) {
  RandomSource rs(33);
  Connection conn = rs.trace_free_connection(2, 1);
  const Poly mu(make_rat(-1, 3));
  Poly a = rs.symbol(2, 2, 2) + rs.symbol(2, 1, 1) + rs.base_poly(2, 2);
  EXPECT_EQ(symbol_map(quantization_map(a, 0, mu, conn), conn), a);
}

TEST(Star, OperatorComposition) {
  // The star product is the symbol of the composition of quantized operators.
  RandomSource rs(34);
  Connection conn = rs.trace_free_connection(2, 1);
  const Poly mu(make_rat(1, 4));
  Poly a = rs.symbol(2, 1, 2), b = rs.symbol(2, 2, 1);
  DensityDiffOp prod = compose(quantization_map(a, 0, mu, conn), quantization_map(b, 0, mu, conn));
  EXPECT_EQ(symbol_map(prod, conn), sum_all(star_product(a, b, mu, conn)));
}

TEST(Star, InfinityRoutesAgree) {
  RandomSource rs(35);
  for (int trial = 0; trial < 3; ++trial) {
    Connection conn = trial ? rs.trace_free_connection(2, 1) : Connection(2);
    Poly a = rs.symbol(2, 1 + trial % 2, 1), b = rs.symbol(2, 1, 2);
    auto closed = star_infinity(a, b, conn);
    EXPECT_EQ(closed, star_infinity_from_limit(a, b, conn));
    EXPECT_EQ(closed, star_infinity_from_lifts(a, b, conn));
    EXPECT_EQ(closed, star_infinity(b, a, conn));
  }
}

TEST(Star, FirstCochainCoboundaryFlatVectors) {
  // Hand expansion for weight-zero vectors on a flat chart:
  //   a C_1(b) - C_1(a b) + C_1(a) b
  //     = 2/((n+1)(n+3)) (a div b + b div a) - 1/(n+3) (a.d b + b.d a).
  const int n = 2;
  Poly a = parse_poly("x1^2*z1 + x2*z2"), b = parse_poly("x1*x2*z2 - z1");
  Poly da = parse_poly("2*x1 + 1"), db = parse_poly("x1");
  Poly a_db = parse_poly("x1^2*x2*z2 + x2*x1*z2"), b_da = parse_poly("-2*x1*z1 + x1*x2*z2");
  Poly expected = (a * db + b * da) * (Rat(2) / Rat((n + 1) * (n + 3))) - (a_db + b_da) / Rat(n + 3);
  EXPECT_EQ(c1_coboundary(a, b, Connection(n)), expected);
  // This is -(2/(n+3)) L_1(a, b).
  EXPECT_EQ(c1_coboundary(a, b, Connection(n)), -c1_target(a, b, Connection(n)));
}

TEST(Star, FirstCochainCoboundaryIsMinusTopOperator) {
  RandomSource rs(36);
  Connection conn = rs.trace_free_connection(2, 1);
  Poly a = rs.symbol(2, 2, 2), b = rs.symbol(2, 1, 2);
  EXPECT_EQ(c1_coboundary(a, b, conn), -c1_target(a, b, conn));
}

TEST(Star, ValencePieces) {
  auto pieces = valence_pieces(parse_poly("x1 + z1*x2 + 3*z1*z2"));
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0], parse_poly("x1"));
  EXPECT_EQ(pieces[1], parse_poly("x2*z1"));
  EXPECT_EQ(pieces[2], parse_poly("3*z1*z2"));
}

TEST(Adjoint, QuantizedOperatorsAreSelfDualUpToSign) {
  RandomSource rs(37);
  const int n = 2;
  for (int k = 1; k <= 3; ++k) {
    const Rat mu = make_rat(1, 3) * k;
    Poly a = rs.symbol(n, k, 2);
    DensityDiffOp op = quantization_map(a, 0, Poly(mu), Connection(n));
    DensityDiffOp adj = formal_adjoint(op);
    const Poly dual(-mu - Rat(n + 1));
    EXPECT_EQ(adj.source, dual);
    Poly expected = quantization_map(a, 0, dual, Connection(n)).symbol;
    EXPECT_EQ(adj.symbol, k % 2 ? -expected : expected) << k;

    Poly u = rs.base_poly(n, 3), v = rs.base_poly(n, 3);
    auto J = adjoint_potential(n, op.symbol, u, v);
    Poly div;
    for (int i = 0; i < n; ++i) div += diff(J[i], var::x(i));
    EXPECT_EQ(apply(op, u) * v - u * apply(adj, v), div) << k;
  }
}

TEST(Adjoint, SymbolOfFirstOrderOperator) {
  // (c d)^* = -d o c = -c d - c'.
  EXPECT_EQ(adjoint_symbol(parse_poly("x1^2*d1")), parse_poly("-x1^2*d1 - 2*x1"));
}

TEST(Gauge, IdentityWhenStructuresAgree) {
  RandomSource rs(38);
  Connection conn = rs.trace_free_connection(2, 1);
  Poly a = rs.symbol(2, 2, 1);
  auto D = gauge_transform(conn, conn, a, Poly(make_rat(1, 2)));
  EXPECT_EQ(D[0], a);
  for (std::size_t r = 1; r < D.size(); ++r) EXPECT_TRUE(D[r].is_zero()) << r;
}

TEST(Gauge, IntertwinesStarProducts) {
  RandomSource rs(39);
  const int n = 2;
  const Poly mu(make_rat(-2, 3));
  Connection from(n), to = rs.trace_free_connection(n, 1);
  Poly a = rs.symbol(n, 1, 1), b = rs.symbol(n, 1, 2);
  Poly lhs;
  for (const auto& piece : star_product(a, b, mu, from)) lhs += sum_all(gauge_transform(from, to, piece, mu));
  Poly Da = sum_all(gauge_transform(from, to, a, mu)), Db = sum_all(gauge_transform(from, to, b, mu));
  EXPECT_EQ(lhs, sum_all(star_product(Da, Db, mu, to)));
}

TEST(Derivation, ProjectiveVectorFieldsActByBracket) {
  RandomSource rs(40);
  Poly x = parse_poly("x1^2*z1 + x1*x2*z2");
  auto rep = derivation_check(x, rs.symbol(2, 2, 2), Poly::variable(var::kMu), Connection(2));
  EXPECT_TRUE(rep.automorphism);
  EXPECT_TRUE(rep.first_order);
  EXPECT_TRUE(rep.higher_vanish);
}

TEST(Suite, StarSymmetryChecksHold) {
  SuiteConfig cfg;
  cfg.cases = 3;
  for (const auto& check : run_suite("star-symmetry", cfg).checks) EXPECT_TRUE(check.holds) << check.name << ": " << check.detail;
}
