#include <gtest/gtest.h>

#include "sphplanks/generate.hpp"
#include "sphplanks/measure.hpp"

using namespace sphplanks;

namespace {

void expect_within_3se(const Estimate& e, double exact) {
  EXPECT_LE(std::abs(e.value - exact), 3 * e.std_error) << e.value << " vs " << exact << " se " << e.std_error;
}

}  // namespace

TEST(Volume, OctantAndHemisphere) {
  const McOptions opt{1'000'000, 17, 1};
  expect_within_3se(volume_mc(octant(2), opt), kPi / 2);
  expect_within_3se(volume_mc(octant(3), opt), 2 * kPi * kPi / 16);
  expect_within_3se(volume_mc(hemisphere(UnitVector::axis(4, 1)), opt), kPi * kPi);
}

TEST(Volume, NonBodyIsExactZero) {
  const Estimate e = volume_mc(hemisphere(UnitVector::axis(3, 0)).polar(), McOptions{});
  EXPECT_EQ(e.value, 0.0);
  EXPECT_EQ(e.std_error, 0.0);
}

TEST(Volume, LuneLaw) {
  Stream s(23);
  for (double alpha : {0.4, 1.7}) {
    const Lune l = random_lune(2, alpha, s);
    // sigma(lune) = alpha / (2 pi) * sigma_n = (sigma_n / pi) * r.
    expect_within_3se(volume_mc(l.body, McOptions{1'000'000, 31, 1}), 4 * kPi * alpha / (2 * kPi));
  }
}

TEST(Volume, SameResultForAnyThreadCount) {
  const ConvexBody k = octant(3);
  const Estimate a = volume_mc(k, McOptions{200'000, 5, 1});
  const Estimate b = volume_mc(k, McOptions{200'000, 5, 3});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(MeanWidth, ClosedForms) {
  const McOptions opt{1'000'000, 41, 1};
  // Directions whose great circle misses the octant form the open octant
  // and its negative: 4 pi - pi = 3 pi, halved.
  expect_within_3se(mean_width_mc(octant(2), opt), 1.5 * kPi);
  // A lune meets every great subsphere.
  Stream s(2);
  EXPECT_DOUBLE_EQ(mean_width_mc(random_lune(2, 1.0, s).body, opt).value, 2 * kPi);
  // Cap of radius rho: |angle(u, c) - pi/2| <= rho, measure 4 pi sin rho.
  const double rho = 0.7;
  const int N = 512;
  const Estimate cap = mean_width_mc(polytopal_cap(SphericalCap(UnitVector::axis(3, 2), rho), N), opt);
  const double inner = std::atan(std::tan(rho) * std::cos(kPi / N));
  EXPECT_LE(cap.value, 2 * kPi * std::sin(rho) + 3 * cap.std_error);
  EXPECT_GE(cap.value, 2 * kPi * std::sin(inner) - 3 * cap.std_error);
}

TEST(PolarIdentity, OctantAndCap) {
  const McOptions opt{1'000'000, 3, 1};
  const VerificationReport r = check_polar_identity(octant(2), opt);
  EXPECT_TRUE(r.pass) << r.slack << " tol " << r.tolerance;
  EXPECT_NEAR(r.extra("polar_volume"), kPi / 2, 0.02);
  const VerificationReport h = check_polar_identity(hemisphere(UnitVector::axis(3, 1)), opt);
  EXPECT_TRUE(h.pass);
  EXPECT_TRUE(h.has_flag("polar_without_interior"));
}

TEST(VolumeBound, OctantSlack) {
  const VerificationReport r = verify_volume_bound(octant(2), McOptions{1'000'000, 8, 1});
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.slack, 4 * std::asin(1 / std::sqrt(3.0)) - kPi / 2, 3 * r.lhs.std_error);
  EXPECT_GE(r.slack, 0.8);
  EXPECT_FALSE(r.has_flag("equality_within_3sigma"));
}

TEST(VolumeBound, RefusesNonBody) {
  EXPECT_THROW(verify_volume_bound(hemisphere(UnitVector::axis(3, 0)).polar(), McOptions{}), GeometryError);
}
