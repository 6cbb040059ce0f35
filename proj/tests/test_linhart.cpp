#include <gtest/gtest.h>

#include <functional>

#include "sphplanks/linhart.hpp"

using namespace sphplanks;

namespace {

// Smallest ball through subsets of at most n+1 points that contains all.
double brute_force_seb_radius(const Eigen::MatrixXd& p) {
  const int n = static_cast<int>(p.rows());
  const int m = static_cast<int>(p.cols());
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> idx;
    for (int j = 0; j < m; ++j)
      if (mask & (1 << j)) idx.push_back(j);
    if (static_cast<int>(idx.size()) > n + 1) continue;
    // Circumcenter of the subset within its affine hull.
    const int k = static_cast<int>(idx.size()) - 1;
    Eigen::VectorXd c = p.col(idx[0]);
    if (k > 0) {
      Eigen::MatrixXd q(n, k);
      for (int i = 0; i < k; ++i) q.col(i) = p.col(idx[i + 1]) - p.col(idx[0]);
      const Eigen::MatrixXd g = q.transpose() * q;
      if (std::abs(g.determinant()) < 1e-12) continue;
      c += q * g.ldlt().solve(0.5 * g.diagonal());
    }
    double r = 0.0;
    for (int j = 0; j < m; ++j) r = std::max(r, (p.col(j) - c).norm());
    best = std::min(best, r);
  }
  return best;
}

}  // namespace

TEST(EnclosingBall, MatchesBruteForce) {
  Stream s(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 2;
    const int m = 2 + static_cast<int>(s() % 8);
    Eigen::MatrixXd p(n, m);
    for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = s.normal();
    EXPECT_NEAR(smallest_enclosing_ball(p).radius, brute_force_seb_radius(p), 1e-10) << "trial " << trial;
  }
}

TEST(EnclosingBall, Deterministic) {
  Eigen::MatrixXd p(2, 4);
  p << 0, 1, 0, 1, 0, 0, 1, 1;
  const Ball b = smallest_enclosing_ball(p);
  EXPECT_NEAR(b.radius, std::sqrt(0.5), 1e-14);
  EXPECT_NEAR((b.center - Eigen::Vector2d(0.5, 0.5)).norm(), 0.0, 1e-14);
}

TEST(SimplexInBall, Validation) {
  // Vertices at polar angles 0, 0.5, 1.0 span an obtuse triangle.
  Eigen::MatrixXd obtuse(2, 3);
  obtuse << 1, std::cos(0.5), std::cos(1.0), 0, std::sin(0.5), std::sin(1.0);
  EXPECT_THROW(SimplexInBall::from_vertices(obtuse), GeometryError);
  const double a = 2.6;
  Eigen::MatrixXd acute(2, 3);
  acute << 1, std::cos(a), std::cos(a), 0, std::sin(a), -std::sin(a);
  EXPECT_NO_THROW(SimplexInBall::from_vertices(acute));
  Eigen::MatrixXd unequal(2, 2);
  unequal << 1, -2, 0, 0;
  EXPECT_THROW(SimplexInBall::from_vertices(unequal), GeometryError);
  Eigen::MatrixXd collinear(2, 3);
  collinear << 1, -1, 1, 0, 0, 0;
  EXPECT_THROW(SimplexInBall::from_vertices(collinear), GeometryError);
}

TEST(SimplexInBall, Constructors) {
  const SimplexInBall t = regular_simplex(2, 2, 1.0);
  EXPECT_EQ(t.k(), 2);
  EXPECT_NEAR((t.vertex(0) - t.vertex(1)).norm(), std::sqrt(3.0), 1e-12);
  const SimplexInBall tet = regular_simplex(3, 3, 2.0);
  EXPECT_NEAR(tet.vertex(0).dot(tet.vertex(1)), -4.0 / 3, 1e-12);
  Stream s(5);
  for (int i = 0; i < 20; ++i) {
    const SimplexInBall r = random_simplex(3, 1 + i % 3, 1.5, s);
    EXPECT_NEAR(r.radius(), 1.5, 1e-12);
  }
}

TEST(NormalCone, SegmentIsHemisphere) {
  const SimplexInBall seg = diameter_segment(Eigen::Vector3d(0, 0, 1), 1.0);
  EXPECT_TRUE(normal_cone_membership(seg, 0, Eigen::Vector3d(1, 0, 0.1)));
  EXPECT_FALSE(normal_cone_membership(seg, 0, Eigen::Vector3d(1, 0, -0.1)));
}

TEST(ConstantC, ClosedForms) {
  const WeightFunction one = WeightFunction::constant(1.0);
  EXPECT_NEAR(constant_C(1.0, one, 2), 2 / kPi, 1e-12);
  EXPECT_NEAR(constant_C(3.0, one, 3), 1.5, 1e-12);
  // Spherical weight in the plane: (2/pi) atan R.
  for (double R : {0.2, 1.0, 5.0})
    EXPECT_NEAR(constant_C(R, WeightFunction::spherical(2), 2), 2 / kPi * std::atan(R), 1e-12);
  EXPECT_NEAR(uf_lower_bound(std::tan(0.7), WeightFunction::spherical(2), 2), 4 * 0.7, 1e-12);
}

TEST(SphericalImage, RegularTriangleBeatsBound) {
  const SimplexInBall t = regular_simplex(2, 2, 1.0);
  const VerificationReport r = check_spherical_image_inequality(t, 0, WeightFunction::constant(1.0),
                                                                McOptions{1'000'000, 12, 1});
  // S_j is a 120 degree arc about v_j: mean of cos over [-pi/3, pi/3].
  const double exact = std::sin(kPi / 3) / (kPi / 3);
  EXPECT_NEAR(r.lhs.value, exact, 3 * r.lhs.std_error);
  EXPECT_GT(r.lhs.value - 3 * r.lhs.std_error, 2 / kPi);
  EXPECT_NEAR(r.extra("measure_Sj"), 2 * kPi / 3, 3 * r.extra("measure_Sj_stderr"));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.extra("Sj_outside_Dj"), 0.0);
}

TEST(SphericalImage, SegmentIsEqualityCase) {
  const SimplexInBall seg = diameter_segment(Eigen::Vector3d(1, 2, 2), 1.3);
  const WeightFunction w = WeightFunction::spherical(3);
  const VerificationReport r = check_spherical_image_inequality(seg, 1, w, McOptions{1'000'000, 14, 1});
  EXPECT_TRUE(r.pass);
  EXPECT_LE(std::abs(r.slack), 3 * r.lhs.std_error);
}

TEST(SphericalImage, RandomSimplices) {
  Stream s(15);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    const SimplexInBall t = random_simplex(n, n, 1.0, s);
    for (int j = 0; j <= t.k(); ++j) {
      const auto r = check_spherical_image_inequality(t, j, WeightFunction::spherical(n), McOptions{100'000, 20u + trial, 1});
      EXPECT_TRUE(r.pass) << "trial " << trial << " vertex " << j;
    }
  }
}

TEST(KbInstances, EnclosingBallIsTheUnitBall) {
  Stream s(16);
  for (int i = 0; i < 50; ++i) {
    const EuclideanPolytope p = random_kb_instance(2, 1.0, s);
    const Ball b = smallest_enclosing_ball(p.vertices);
    EXPECT_NEAR(b.radius, 1.0, 1e-8);
    EXPECT_LT(b.center.norm(), 1e-8);
  }
}

TEST(MinUfSearch, SegmentIsMinimal) {
  for (const auto& w : {WeightFunction::constant(1.0), WeightFunction::spherical(2)}) {
    const VerificationReport r = min_uf_search(2, 1.0, w, 40, McOptions{100'000, 3, 1});
    EXPECT_TRUE(r.pass) << w.name();
    EXPECT_NEAR(r.extra("segment_value"), r.extra("lower_bound"), 1e-8);
  }
}
