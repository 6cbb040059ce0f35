#include <gtest/gtest.h>

#include "sphplanks/montecarlo.hpp"
#include "sphplanks/quadrature.hpp"
#include "sphplanks/sphere.hpp"

using namespace sphplanks;

TEST(SphereArea, StandardValues) {
  EXPECT_NEAR(sphere_area(1), 2 * kPi, 1e-12);
  EXPECT_NEAR(sphere_area(2), 4 * kPi, 1e-12);
  EXPECT_NEAR(sphere_area(3), 2 * kPi * kPi, 1e-12);
  EXPECT_THROW(sphere_area(0), GeometryError);
}

TEST(SphereArea, MatchesSurfaceElementIntegral) {
  // sigma_n = sigma_{n-1} * int_0^pi sin^{n-1}.
  for (int n = 2; n <= 3; ++n) {
    const double integral = integrate([n](double t) { return std::pow(std::sin(t), n - 1); }, 0.0, kPi, 1e-13).value;
    EXPECT_NEAR(sphere_area(n), sphere_area(n - 1) * integral, 1e-9);
  }
}

TEST(CapArea, ClosedForms) {
  EXPECT_NEAR(cap_area(2, 0.7), 2 * kPi * (1 - std::cos(0.7)), 1e-12);
  EXPECT_NEAR(cap_area(2, kPi), 4 * kPi, 1e-12);
  EXPECT_NEAR(cap_area(1, 0.3), 0.6, 1e-15);
  // S^3: sigma_2 * int_0^rho sin^2 = 4 pi (rho/2 - sin(2 rho)/4).
  EXPECT_NEAR(cap_area(3, 1.1), 4 * kPi * (0.55 - std::sin(2.2) / 4), 1e-12);
}

TEST(GeodesicDistance, Examples) {
  const UnitVector x = UnitVector::axis(3, 0);
  const UnitVector y = UnitVector::axis(3, 1);
  EXPECT_DOUBLE_EQ(geodesic_distance(x, x), 0.0);
  EXPECT_NEAR(geodesic_distance(x, -x), kPi, 1e-15);
  EXPECT_NEAR(geodesic_distance(x, y), kPi / 2, 1e-15);
  EXPECT_THROW(geodesic_distance(x, UnitVector::axis(4, 0)), GeometryError);
}

TEST(GeodesicDistance, SymmetricAndTriangle) {
  Stream s(11);
  for (int i = 0; i < 2000; ++i) {
    const UnitVector a = sample_uniform_sphere(3, s), b = sample_uniform_sphere(3, s), c = sample_uniform_sphere(3, s);
    EXPECT_EQ(geodesic_distance(a, b), geodesic_distance(b, a));
    EXPECT_LE(geodesic_distance(a, c), geodesic_distance(a, b) + geodesic_distance(b, c) + 1e-12);
  }
}

TEST(UnitVector, RejectsNonUnit) {
  Eigen::VectorXd v(3);
  v << 1, 1, 0;
  EXPECT_THROW(UnitVector{v}, GeometryError);
  EXPECT_NEAR(UnitVector::normalize(v).coords().norm(), 1.0, 1e-15);
}

TEST(UniformSphere, NormAndSymmetry) {
  const std::size_t N = 1'000'000;
  Stream s(3);
  std::size_t hits = 0;
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Vector4d x;
  for (std::size_t i = 0; i < N; ++i) {
    sample_uniform_sphere_into(s, x);
    if (i < 1000) ASSERT_NEAR(x.norm(), 1.0, 1e-12);
    if (x[3] > 0) ++hits;
    mean += x;
  }
  mean /= static_cast<double>(N);
  EXPECT_NEAR(static_cast<double>(hits) / N, 0.5, 3 * 0.5 / 1000);
  for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(mean[i]), 3.0 / 1000);
}

TEST(UniformCap, RejectionStaysInCap) {
  const SphericalCap cap(UnitVector::axis(3, 2), kPi / 2);
  Stream s(5);
  Eigen::Vector3d x;
  const std::size_t N = 1'000'000;
  std::size_t sub = 0;
  for (std::size_t i = 0; i < N; ++i) {
    sample_uniform_cap_into(cap, s, x);
    ASSERT_LE(angle_between(x, cap.center.coords()), kPi / 2 + 1e-12);
    if (x[2] >= std::cos(kPi / 4)) ++sub;
  }
  const double p = 1 - std::cos(kPi / 4);
  EXPECT_NEAR(static_cast<double>(sub) / N, p, 3 * std::sqrt(p * (1 - p) / N));
}

TEST(UniformCap, ZeroRadiusIsCenter) {
  const SphericalCap cap(UnitVector::axis(3, 1), 0.0);
  Stream s(1);
  EXPECT_EQ(sample_uniform_cap(cap, s).coords(), cap.center.coords());
}

TEST(UniformCap, TestCapMeasure) {
  // Intersection of the domain cap with a second cap: fraction of samples
  // against the exact ratio when the test cap lies inside the domain.
  Eigen::Vector3d c(1, 0, 1);
  const SphericalCap domain(UnitVector::axis(3, 2), 2.0);
  const SphericalCap test(UnitVector::normalize(c), 0.5);
  Stream s(9);
  Eigen::Vector3d x;
  const std::size_t N = 400'000;
  std::size_t in = 0;
  for (std::size_t i = 0; i < N; ++i) {
    sample_uniform_cap_into(domain, s, x);
    if (test.contains(x)) ++in;
  }
  const double p = cap_area(2, 0.5) / cap_area(2, 2.0);
  EXPECT_NEAR(static_cast<double>(in) / N, p, 3 * std::sqrt(p * (1 - p) / N));
}

TEST(OrthogonalComplement, IsOrthonormal) {
  Eigen::MatrixXd a(4, 2);
  a << 1, 0, 1, 1, 0, 1, 0, 0;
  const Eigen::MatrixXd q = orthogonal_complement(a, 4);
  ASSERT_EQ(q.cols(), 2);
  EXPECT_LT((q.transpose() * q - Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-14);
  EXPECT_LT((a.transpose() * q).norm(), 1e-14);
}

TEST(Stream, SplitIsDeterministic) {
  Stream a(42), b(42);
  Stream ca = a.split(3), cb = b.split(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(ca(), cb());
  EXPECT_NE(Stream(42).split(1)(), Stream(42).split(2)());
}

TEST(RunBatches, IndependentOfThreads) {
  auto kernel = [](Stream& s, std::size_t count, Accumulator& acc) {
    for (std::size_t i = 0; i < count; ++i) acc.add(s.normal());
  };
  McOptions o1{100'003, 77, 1}, o4{100'003, 77, 4};
  const Accumulator a = run_batches(o1, kernel), b = run_batches(o4, kernel);
  EXPECT_EQ(a.count, 100'003u);
  EXPECT_EQ(a.sum, b.sum);
  EXPECT_EQ(a.sum_sq, b.sum_sq);
}
