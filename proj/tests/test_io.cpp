#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "projstar/io.hpp"

using namespace projstar;

TEST(ConnectionJson, SymmetricFillAndScaleForm) {
  Json j = Json::parse(R"({"n": 2, "gamma": {"1,2,1": "x2", "2,2,2": 3}, "scale_form": ["0", "x2"]})");
  Connection c = connection_from_json(j);
  EXPECT_EQ(c.dim(), 2);
  EXPECT_EQ(c.gamma(0, 1, 0), parse_poly("x2"));
  EXPECT_EQ(c.gamma(1, 0, 0), parse_poly("x2"));
  EXPECT_EQ(c.gamma(1, 1, 1), Poly(3));
  EXPECT_TRUE(c.gamma(0, 0, 0).is_zero());
  EXPECT_EQ(c.scale_form(1), parse_poly("x2"));
}

TEST(ConnectionJson, Errors) {
  EXPECT_THROW(connection_from_json(Json::parse(R"({"gamma": {}})")), ParseError);
  EXPECT_THROW(connection_from_json(Json::parse(R"({"n": 9})")), ParseError);
  EXPECT_THROW(connection_from_json(Json::parse(R"({"n": 2, "gamma": {"1,3,1": "x1"}})")), ParseError);
  EXPECT_THROW(connection_from_json(Json::parse(R"({"n": 2, "gamma": {"1,2": "x1"}})")), ParseError);
  EXPECT_THROW(connection_from_json(Json::parse(R"({"n": 2, "gamma": {"1,2,1": "x1", "2,1,1": "x2"}})")),
               ParseError);
  EXPECT_THROW(connection_from_json(Json::parse(R"({"n": 2, "gamma": {"1,1,1": "x1 +"}})")), ParseError);
  EXPECT_THROW(connection_from_json(Json::parse(R"({"n": 2, "scale_form": ["0"]})")), ParseError);
  EXPECT_THROW(load_connection("/nonexistent/connection.json"), ParseError);
}

TEST(ConnectionJson, RoundTripThroughFile) {
  std::vector<Poly> g(8);
  g[(0 * 2 + 1) * 2 + 1] = g[(1 * 2 + 0) * 2 + 1] = parse_poly("x1 - 1/2");
  g[(0 * 2 + 0) * 2 + 1] = parse_poly("x2^2");
  Connection c(2, g);
  const std::string path = ::testing::TempDir() + "projstar_conn.json";
  {
    std::ofstream out(path);
    out << connection_to_json(c).dump();
  }
  Connection back = load_connection(path);
  std::remove(path.c_str());
  EXPECT_EQ(back.gammas(), c.gammas());
}

TEST(Render, PolyAndSeries) {
  Json p = poly_to_json(parse_poly("x1*z1 - 1/3*w"));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p["x1*z1"], "1");
  EXPECT_EQ(p["w"], "-1/3");
  Json s = series_to_json({Poly(1), Poly()});
  EXPECT_EQ(s["0"]["1"], "1");
  EXPECT_TRUE(s["1"].empty());
  EXPECT_EQ(series_to_text({Poly(2), Poly(), parse_poly("x1")}, "eps"), "[eps^0] 2\n[eps^2] x1\n");
  EXPECT_EQ(series_to_text({}, "c"), "0\n");
}
