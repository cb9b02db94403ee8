#include <gtest/gtest.h>

#include "cwlab/error.hpp"
#include "cwlab/json_io.hpp"

namespace {

using namespace cwlab;

TEST(Json, ExactValuesRoundTrip) {
  const Vec v{Scalar::parse("1/2+1/2r3"), Scalar::parse("-r3"), 0, Scalar::rational(-7, 3)};
  EXPECT_EQ(vec_from_json(Json::parse(to_json(v).dump())), v);
  EXPECT_EQ(to_json(v)[0], "1/2+1/2r3");

  const auto a2 = build_root_system(LieType::A(2));
  const auto cert = nullspace_certify_orbit(a2, Vec{2, -1, -1});
  ASSERT_TRUE(cert.witness.has_value());
  const Json j = Json::parse(to_json(cert).dump());
  EXPECT_EQ(j["verdict"], "COUNTEREXAMPLE");
  EXPECT_EQ(j["method"], "NULLSPACE");
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_TRUE(j["quadric_space_dim"].is_number());
  EXPECT_EQ(quadric_from_json(j["witness"]), *cert.witness);

  const auto ok = nullspace_certify_orbit(a2, Vec{1, 0, -1});
  EXPECT_TRUE(to_json(ok)["witness"].is_null());
}

TEST(Json, StratumRow) {
  const auto rows = enumerate_strata(LieType::D(3));
  const Json j = to_json(rows.back());
  for (const char* key : {"family", "rank", "n0", "parts", "codim", "generic"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["family"], "D");
  EXPECT_EQ(j["rank"], 3);
}

TEST(Json, RandersBothModes) {
  const auto d = navigation_to_randers(ExactMatrix::identity(2), Vec{Scalar::rational(1, 2), 0});
  const Json exact = Json::parse(to_json(d).dump());
  EXPECT_EQ(exact["mode"], "exact");
  EXPECT_EQ(randers_from_json(exact), d);

  const auto nd = to_numeric(d);
  const Json fl = Json::parse(to_json(nd).dump());
  EXPECT_EQ(fl["mode"], "float");
  const auto back = numeric_randers_from_json(fl);
  EXPECT_TRUE(back.alpha_gram.isApprox(nd.alpha_gram, 1e-15));
  EXPECT_TRUE(back.w.isApprox(nd.w, 1e-15));
  EXPECT_TRUE(numeric_randers_from_json(exact).alpha_gram.isApprox(nd.alpha_gram, 1e-15));

  EXPECT_THROW(randers_from_json(fl), Error);
  EXPECT_THROW(numeric_randers_from_json(Json{{"mode", "exact"}}), Error);
  EXPECT_THROW(numeric_randers_from_json(Json{{"mode", "other"}}), Error);
}

TEST(Json, ComplexMatrixAndSolverReport) {
  Eigen::MatrixXcd m(2, 2);
  m << std::complex<double>(0, 1.5), 2, -2, std::complex<double>(0, -1.5);
  const Json j = Json::parse(to_json(m).dump());
  EXPECT_EQ(j[0][0][1], 1.5);
  EXPECT_TRUE(complex_matrix_from_json(j).isApprox(m));

  const AlgebraElement x{GroupFamily::kSU, m.cwiseProduct(Eigen::MatrixXcd::Identity(2, 2)) / (1.5 * std::sqrt(2.0))};
  const AlgebraElement v{GroupFamily::kSU, Eigen::MatrixXcd::Zero(2, 2)};
  const auto r = lemgeo_solve(x, 6.0, v);
  const Json rj = to_json(r);
  EXPECT_TRUE(rj["contraction_ratios"].is_array());
  EXPECT_DOUBLE_EQ(rj["t_prime"].get<double>(), r.t_prime);
}

}  // namespace
