#include <gtest/gtest.h>

#include "cwlab/error.hpp"
#include "cwlab/orbit_certify.hpp"
#include "cwlab/randers.hpp"
#include "cwlab/sampling.hpp"
#include "oracles.hpp"

namespace {

using namespace cwlab;

Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(x);
  return v;
}

std::vector<Vec> chart_orbit(const RootSystem& rs, const Vec& x) {
  const auto chart = cartan_chart(rs);
  std::vector<Vec> out;
  for (const auto& p : weyl_orbit(rs, x).points) out.push_back(chart.to_chart(p));
  return out;
}

Vec flatten(const Quadric& q) {
  Vec out;
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j) out.push_back(q.a(i, j));
  out.insert(out.end(), q.b.begin(), q.b.end());
  out.push_back(q.c);
  return out;
}

bool in_span(const std::vector<Quadric>& basis, const Quadric& q) {
  RowReducer red(quadric_unknowns(q.dim()));
  for (const auto& b : basis) red.add(flatten(b));
  return !red.add(flatten(q));
}

// b-parts of a float null space basis of the evaluation system
double float_b_projection(const std::vector<Vec>& pts) {
  const std::size_t n = pts[0].size();
  oracle::DMatrix rows;
  for (const auto& p : pts) rows.push_back(oracle::quadric_row(to_double(p)));
  double worst = 0.0;
  for (const auto& v : oracle::float_null_space(rows))
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(v[n * (n + 1) / 2 + k]));
  return worst;
}

void expect_valid_witness(const CenterCertificate& c, std::span<const Vec> pts) {
  ASSERT_EQ(c.verdict, Verdict::kCounterexample);
  ASSERT_TRUE(c.witness.has_value());
  const Quadric& q = *c.witness;
  for (const auto& p : pts) EXPECT_TRUE(q.evaluate(p).is_zero());
  EXPECT_TRUE(is_positive_definite(q.a));
  EXPECT_FALSE(is_zero(q.b));
  const auto center = q.center();
  ASSERT_TRUE(center.has_value());
  EXPECT_FALSE(is_zero(*center));
}

TEST(QuadricSpace, SpecExamples) {
  const std::vector<Vec> line{ints({1}), ints({-1})};
  const auto l1 = quadric_space(line);
  ASSERT_EQ(l1.size(), 1u);
  EXPECT_TRUE(l1[0].b[0].is_zero());
  EXPECT_EQ(l1[0].c, -l1[0].a(0, 0));

  const std::vector<Vec> one{ints({1, 0})};
  EXPECT_EQ(quadric_space(one).size(), 5u);

  const auto a2 = build_root_system(LieType::A(2));
  const auto orbit = weyl_orbit(a2, ints({1, 0, -1}));
  EXPECT_TRUE(in_span(quadric_space(orbit.points), Quadric{ExactMatrix::identity(3), Vec(3), -2}));
  // the same circle written in the chart (a0, a1) where |x|^2 = x^T G x
  const auto chart = cartan_chart(a2);
  EXPECT_TRUE(in_span(quadric_space(chart_orbit(a2, ints({1, 0, -1}))), Quadric{chart.gram, Vec(2), -2}));
}

TEST(QuadricSpace, Errors) {
  EXPECT_THROW(quadric_space(std::vector<Vec>{}), Error);
  EXPECT_THROW(quadric_space(std::vector<Vec>{ints({1, 0}), ints({1})}), Error);
  EXPECT_EQ(quadric_unknowns(2), 6u);
  EXPECT_EQ(quadric_unknowns(6), 28u);
}

TEST(CenterForced, A1OrbitInItsCartanLine) {
  const auto a1 = build_root_system(LieType::A(1));
  const Scalar a = Scalar::rational(5, 7);
  const auto cert = nullspace_certify_orbit(a1, Vec{a, -a});
  EXPECT_EQ(cert.verdict, Verdict::kCertifiedCentered);
  EXPECT_EQ(cert.quadric_space_dim, 1u);
  const std::vector<Vec> chart{Vec{a}, Vec{-a}};
  EXPECT_EQ(center_forced(chart, cartan_chart(a1).gram).verdict, Verdict::kCertifiedCentered);
  // in the ambient plane a second direction is free, so the answer changes
  const std::vector<Vec> ambient{Vec{a, -a}, Vec{-a, a}};
  expect_valid_witness(center_forced(ambient), ambient);
}

TEST(CenterForced, A2Examples) {
  const auto a2 = build_root_system(LieType::A(2));
  const auto gram = cartan_chart(a2).gram;

  const auto three = chart_orbit(a2, ints({2, -1, -1}));
  ASSERT_EQ(three.size(), 3u);
  EXPECT_GT(float_b_projection(three), 1e-6);
  const auto cx = center_forced(three, gram);
  expect_valid_witness(cx, three);

  const auto six = chart_orbit(a2, ints({1, 0, -1}));
  ASSERT_EQ(six.size(), 6u);
  EXPECT_LT(float_b_projection(six), 1e-9);
  const auto ok = center_forced(six, gram);
  EXPECT_EQ(ok.verdict, Verdict::kCertifiedCentered);
  EXPECT_FALSE(ok.witness.has_value());
}

TEST(CenterForced, RefusesOffSphere) {
  const std::vector<Vec> pts{ints({1, 0}), ints({0, 2}), ints({-1, 0})};
  EXPECT_EQ(center_forced(pts).verdict, Verdict::kNotApplicable);
}

TEST(SymmetricSpan, SpecExamples) {
  const auto d4 = build_root_system(LieType::D(4));
  const auto orbit = weyl_orbit(d4, ints({1, 2, 3, 4}));
  EXPECT_EQ(symmetric_span_certify(orbit.points).verdict, Verdict::kCertifiedCentered);

  const auto a2 = build_root_system(LieType::A(2));
  EXPECT_EQ(symmetric_span_certify(weyl_orbit(a2, ints({2, -1, -1})).points, 2).verdict,
            Verdict::kNotApplicable);
  EXPECT_EQ(symmetric_span_certify(weyl_orbit(a2, ints({1, 0, -1})).points, 2).verdict,
            Verdict::kCertifiedCentered);

  const std::vector<Vec> pair{ints({1, 2, 3}), ints({-1, -2, -3})};
  EXPECT_EQ(symmetric_span_certify(pair).verdict, Verdict::kNotApplicable);
}

TEST(MidpointAffine, AnGenericShape) {
  for (int n = 2; n <= 5; ++n) {
    const auto rs = build_root_system(LieType::A(n));
    // (a, c_1, ..., c_{n-1}, b) with a > b and distinct c_i
    Vec x{Scalar(10)};
    Scalar sum = 10;
    for (int i = 1; i < n; ++i) x.push_back(Scalar(i) - Scalar::rational(1, 2)), sum += x.back();
    x.push_back(-sum);
    const auto orbit = weyl_orbit(rs, x);
    const auto cert = midpoint_affine_certify(orbit.points, rs.simple_roots(), rs.rank());
    EXPECT_EQ(cert.verdict, Verdict::kCertifiedCentered) << n;
    EXPECT_EQ(cert.hyperplane_ranks, std::vector<std::size_t>(n, n - 1));
  }
}

std::vector<Vec> listed_points(const Scalar& a, const Scalar& b, const Scalar& c, bool pairs) {
  if (!pairs)
    return {{a, b, b, c, c, c}, {c, b, b, a, c, c}, {c, b, b, c, a, c}, {c, b, b, c, c, a}, {a, b, c, b, c, c}};
  return {{a, b, a, b, c, c}, {a, b, b, a, c, c}, {a, b, a, c, b, c}, {a, b, a, c, c, b}, {a, c, a, b, c, b}};
}

TEST(MidpointAffine, A5ListedPointsFormAffineBasis) {
  const auto a5 = build_root_system(LieType::A(5));
  const Vec& v1 = a5.simple_roots()[0];
  ASSERT_EQ(v1, ints({1, -1, 0, 0, 0, 0}));
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    for (bool pairs : {false, true}) {
      Scalar a, b, c;
      do {
        a = random_rational(rng, 6), b = random_rational(rng, 6);
        c = pairs ? -(a + b) : -(a + Scalar(2) * b) / Scalar(3);
      } while (a == b || b == c || a == c);
      const Vec x = pairs ? Vec{a, a, b, b, c, c} : Vec{a, b, b, c, c, c};
      const auto orbit = weyl_orbit(a5, x);
      std::vector<Vec> proj;
      for (const auto& p : listed_points(a, b, c, pairs)) {
        ASSERT_TRUE(orbit.contains(p));
        const Scalar pv = dot(p, v1);
        ASSERT_FALSE(pv.is_zero());
        Vec m = p;
        axpy(m, -(pv / Scalar(2)), v1);
        EXPECT_EQ(m, Scalar::rational(1, 2) * (p + reflect(p, v1)));
        proj.push_back(m);
      }
      EXPECT_EQ(affine_rank(proj), 4u);
      const auto cert = midpoint_affine_certify(orbit.points, a5.simple_roots(), 5);
      EXPECT_EQ(cert.verdict, Verdict::kCertifiedCentered);
    }
  }
}

TEST(MidpointAffine, RefusesWhenNoChordLeavesHyperplane) {
  const auto a2 = build_root_system(LieType::A(2));
  const std::vector<Vec> pts{ints({1, 1, -2})};
  EXPECT_EQ(midpoint_affine_certify(pts, a2.simple_roots(), 2).verdict, Verdict::kNotApplicable);
  const std::vector<Vec> deficient{ints({1, -1, 0})};
  EXPECT_THROW(midpoint_affine_certify(pts, deficient, 2), Error);
}

struct Case {
  LieType t;
  Vec x;
};

TEST(Certify, ConcordanceAndWitnessesOnRandomOrbits) {
  Rng rng(8);
  std::vector<Case> cases;
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 8; ++k) {
      Vec x = random_sum_zero_vec(rng, n + 1, 3);
      if (k % 2) {  // force repeated entries
        x[1] = x[0];
        Scalar s;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) s += x[i];
        x.back() = -s;
      }
      cases.push_back({LieType::A(n), x});
    }
  for (int n : {3, 4})
    for (int k = 0; k < 6; ++k) {
      Vec x = random_rational_vec(rng, n, 3);
      if (k % 3 == 1) x[0] = 0, x[1] = 0;
      if (k % 3 == 2) x[1] = x[0];
      cases.push_back({LieType::D(n), x});
    }
  int counter = 0, certified = 0;
  for (const auto& [t, x] : cases) {
    if (is_zero(x)) continue;
    const auto rs = build_root_system(t);
    const auto res = certify_orbit(rs, x);
    EXPECT_TRUE(res.concordant()) << t.name() << " " << to_string(x);
    if (res.nullspace.verdict == Verdict::kCounterexample) {
      ++counter;
      expect_valid_witness(res.nullspace, chart_orbit(rs, x));
    } else {
      ++certified;
      EXPECT_EQ(res.nullspace.verdict, Verdict::kCertifiedCentered);
    }
    // the same verdict from the full orbit without early exit
    const auto full = center_forced(chart_orbit(rs, x), cartan_chart(rs).gram);
    EXPECT_EQ(full.verdict, res.nullspace.verdict);
    // sphere membership
    const auto pts = chart_orbit(rs, x);
    const auto gram = cartan_chart(rs).gram;
    EXPECT_TRUE(in_span(quadric_space(pts), Quadric{gram, Vec(pts[0].size()), -gram.quadratic_form(pts[0])}));
  }
  EXPECT_GT(counter, 0);
  EXPECT_GT(certified, 0);
}

TEST(Certify, RejectsZeroAndOffSpacePoints) {
  const auto a2 = build_root_system(LieType::A(2));
  EXPECT_THROW(certify_orbit(a2, ints({0, 0, 0})), Error);
  EXPECT_THROW(certify_orbit(a2, ints({1, 0, 0})), Error);
}

// Randers data with the given quadric (c < 0) as indicatrix, B = I.
RandersData randers_with_indicatrix(const Quadric& q) {
  const Scalar s = -q.c.inverse();
  const Vec w = Scalar::rational(1, 2) * (s * q.b);
  const ExactMatrix a = s * q.a + ExactMatrix::outer(w, w);
  return make_randers(a, ExactMatrix::identity(w.size()), w);
}

TEST(Restriction, IndicatrixThroughCertifiedOrbitHasNoLinearPart) {
  Rng rng(21);
  const auto d4 = build_root_system(LieType::D(4));
  int used = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const Vec x = random_rational_vec(rng, 4, 4);
    const auto orbit = weyl_orbit(d4, x);
    ASSERT_EQ(center_forced(orbit.points).verdict, Verdict::kCertifiedCentered);
    // a random member of the quadric space, pushed towards the sphere
    const auto basis = quadric_space(orbit.points);
    Quadric q{ExactMatrix::identity(4), Vec(4), -dot(x, x)};
    for (const auto& b : basis) {
      const Scalar e = random_rational(rng, 4) / Scalar(64);
      q.a += e * b.a, axpy(q.b, e, b.b), q.c += e * b.c;
    }
    if (!is_positive_definite(q.a) || q.c.sign() >= 0) continue;
    ++used;
    const RandersData d = randers_with_indicatrix(q);
    for (const auto& p : orbit.points) EXPECT_TRUE(on_indicatrix(d, p));
    EXPECT_TRUE(is_zero(indicatrix_quadric(d).b));
    EXPECT_TRUE(is_zero(d.w));
  }
  EXPECT_GE(used, 3);
}

TEST(Restriction, CounterexampleGivesOffCenterIndicatrix) {
  const auto a2 = build_root_system(LieType::A(2));
  const auto pts = chart_orbit(a2, ints({2, -1, -1}));
  const auto cert = center_forced(pts, cartan_chart(a2).gram);
  ASSERT_EQ(cert.verdict, Verdict::kCounterexample);
  const RandersData d = randers_with_indicatrix(*cert.witness);
  for (const auto& p : pts) EXPECT_TRUE(on_indicatrix(d, p));
  EXPECT_FALSE(is_zero(d.w));
}

}  // namespace
