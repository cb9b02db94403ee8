#include <gtest/gtest.h>

#include "cwlab/error.hpp"
#include "cwlab/exact_matrix.hpp"
#include "cwlab/sampling.hpp"
#include "oracles.hpp"

namespace {

using namespace cwlab;

const Scalar r3 = Scalar::sqrt3();

ExactMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  for (auto r : rows) {
    Vec v;
    for (long e : r) v.push_back(e);
    rs.push_back(v);
  }
  return ExactMatrix::from_rows(rs);
}

TEST(Scalar, FieldArithmetic) {
  const Scalar x = Scalar::parse("1/2+1/2r3");
  const Scalar y = Scalar::parse("2-r3");
  EXPECT_EQ(x * y, Scalar::parse("-1/2+1/2r3"));
  EXPECT_EQ(x * x.inverse(), Scalar(1));
  EXPECT_EQ((x + y) - y, x);
  EXPECT_EQ(r3 * r3, Scalar(3));
  EXPECT_THROW(Scalar().inverse(), Error);
}

TEST(Scalar, ExactSign) {
  EXPECT_EQ(Scalar::parse("7/4-r3").sign(), 1);   // 1.75 > 1.732
  EXPECT_EQ(Scalar::parse("17/10-r3").sign(), -1);
  EXPECT_EQ(Scalar::parse("-2+r3").sign(), -1);
  EXPECT_TRUE(Scalar::parse("0r3").is_zero());
  EXPECT_LT(Scalar::parse("r3"), Scalar::rational(7, 4));
}

TEST(Scalar, ParseAndPrintRoundTrip) {
  for (const char* text : {"3/2", "-1/2r3", "1/2+1/2r3", "-7/3-r3", "r3", "0"}) {
    const Scalar s = Scalar::parse(text);
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << text;
  }
  EXPECT_EQ(Scalar::parse("0.25"), Scalar::rational(1, 4));
  EXPECT_EQ(Scalar::parse("2*r3"), Scalar(2) * r3);
  EXPECT_THROW(Scalar::parse("abc"), Error);
  EXPECT_THROW(Scalar::parse("1/0"), Error);
  EXPECT_THROW(Scalar::parse(""), Error);
}

TEST(Rank, SpecExamples) {
  EXPECT_EQ(rank(ExactMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(ExactMatrix(3, 4)), 0u);
  // det oracle: 1*3 - r3*r3 = 0
  const ExactMatrix m = ExactMatrix::from_rows({{1, r3}, {r3, 3}});
  EXPECT_TRUE((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero());
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rank, TransposeInvariant) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    ExactMatrix m(3 + t % 3, 4);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = (t % 2) ? random_rational(rng, 2) + random_rational(rng, 2) * r3
                          : random_rational(rng, 2);
    if (t % 4 == 0) m(1, 0) = m(0, 0), m(1, 1) = m(0, 1), m(1, 2) = m(0, 2), m(1, 3) = m(0, 3);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    EXPECT_EQ(m.transpose().transpose(), m);
  }
}

TEST(Rank, AgreesWithFloatOracle) {
  Rng rng(2024);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 2 + t % 4, cols = 2 + (t / 4) % 4;
    ExactMatrix m(rows, cols);
    oracle::DMatrix d(rows, std::vector<double>(cols));
    // low-rank products make rank deficiency common
    const std::size_t inner = 1 + t % 3;
    ExactMatrix left(rows, inner), right(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k) left(i, k) = random_rational(rng, 3);
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) right(k, j) = random_rational(rng, 3);
    m = left * right;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d[i][j] = m(i, j).to_double();
    const auto fr = oracle::float_rank(d, 1e-9);
    if (fr.min_pivot < 1e-6) continue;  // oracle not trustworthy here
    ++compared;
    EXPECT_EQ(rank(m), static_cast<std::size_t>(fr.rank));
  }
  EXPECT_GT(compared, 150);
}

TEST(NullSpace, SpecExamples) {
  EXPECT_TRUE(null_space(ExactMatrix::identity(3)).empty());

  const auto ns = null_space(mat({{1, -1}}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], ns[0][1]);
  EXPECT_FALSE(ns[0][0].is_zero());

  const auto ns3 = null_space(ExactMatrix::from_rows({{1, r3}}));
  ASSERT_EQ(ns3.size(), 1u);
  // proportional to (-r3, 1)
  EXPECT_EQ(ns3[0][0] * Scalar(1), ns3[0][1] * -r3);
}

TEST(NullSpace, BasisVectorsAnnihilateExactly) {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 2 + t % 5;
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = random_rational(rng, 3) + ((t % 3 == 0) ? random_rational(rng, 2) * r3 : Scalar());
    if (rows > 1) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * r3;
    }
    const auto ns = null_space(m);
    EXPECT_EQ(ns.size(), cols - rank(m));
    for (const auto& v : ns) {
      EXPECT_TRUE(is_zero(m * v));
      EXPECT_FALSE(is_zero(v));
    }
    RowReducer red(cols);
    for (std::size_t i = 0; i < rows; ++i) red.add(m.row(i));
    EXPECT_EQ(red.rank(), rank(m));
    for (const auto& v : red.null_space()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(PositiveDefinite, SpecExamples) {
  EXPECT_TRUE(is_positive_definite(ExactMatrix::identity(3)));
  EXPECT_FALSE(is_positive_definite(ExactMatrix::diagonal({1, -1})));
  const ExactMatrix m = mat({{2, 1}, {1, 2}});
  EXPECT_TRUE(is_positive_definite(m));
  const auto minors = leading_principal_minors(m);
  EXPECT_EQ(minors, (std::vector<Scalar>{2, 3}));
  EXPECT_THROW(is_positive_definite(mat({{1, 2}, {0, 1}})), Error);
  EXPECT_FALSE(is_positive_definite(mat({{0, 1}, {1, 0}})));
}

TEST(PositiveDefinite, ImpliesPositiveQuadraticForm) {
  Rng rng(5);
  int positive = 0;
  for (int t = 0; t < 25; ++t) {
    // random symmetric with a diagonal shift so about half are PD
    const std::size_t n = 2 + t % 3;
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng, 4);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += Scalar(t % 2 ? 3 : 0);
    if (!is_positive_definite(m)) continue;
    ++positive;
    for (int k = 0; k < 100; ++k) {
      Vec x = random_rational_vec(rng, n, 9);
      if (is_zero(x)) continue;
      EXPECT_GT(m.quadratic_form(x).sign(), 0);
    }
  }
  EXPECT_GT(positive, 5);
}

TEST(Determinant, MatchesMinors) {
  const ExactMatrix m = ExactMatrix::from_rows({{2, r3, 1}, {r3, 2, 0}, {1, 0, 2}});
  const auto minors = leading_principal_minors(m);
  EXPECT_EQ(minors.back(), determinant(m));
  EXPECT_EQ(minors[1], Scalar(1));  // 4 - 3
  EXPECT_EQ(determinant(mat({{0, 1}, {1, 0}})), Scalar(-1));
}

TEST(Solve, RecoversSolution) {
  const ExactMatrix a = ExactMatrix::from_rows({{2, r3}, {1, 5}});
  const Vec x{Scalar::rational(1, 3), Scalar::parse("1-r3")};
  const auto sol = solve(a, a * x);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, x);
  EXPECT_FALSE(solve(mat({{1, 2}, {2, 4}}), Vec{1, 2}).has_value());
}

TEST(AffineRank, SpecExamples) {
  EXPECT_EQ(affine_rank(std::vector<Vec>{{1, 2}}), 0u);
  EXPECT_EQ(affine_rank(std::vector<Vec>{{0, 0}, {1, 0}, {0, 1}}), 2u);
  EXPECT_THROW(affine_rank(std::vector<Vec>{}), Error);

  // differences ((c_i - b)/2, 0.., c_i - b, ..0) for distinct c_i
  for (int n = 2; n <= 6; ++n) {
    const Scalar b = -5;
    std::vector<Vec> pts{Vec(static_cast<std::size_t>(n) + 1)};
    for (int i = 1; i < n; ++i) {
      const Scalar c = Scalar(i) * Scalar(i) + Scalar::rational(1, 3);
      Vec d(static_cast<std::size_t>(n) + 1);
      d[0] = (c - b) / Scalar(2);
      d[static_cast<std::size_t>(i)] = c - b;
      pts.push_back(d);
    }
    EXPECT_EQ(affine_rank(pts), static_cast<std::size_t>(n - 1)) << n;
  }
}

}  // namespace
