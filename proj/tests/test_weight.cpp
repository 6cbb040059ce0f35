#include <gtest/gtest.h>

#include "sphplanks/quadrature.hpp"
#include "sphplanks/sphere.hpp"
#include "sphplanks/weight.hpp"

using namespace sphplanks;

TEST(Weight, CumulativeMatchesQuadrature) {
  const std::vector<WeightFunction> weights = {
      WeightFunction::spherical(1), WeightFunction::spherical(2), WeightFunction::spherical(3),
      WeightFunction::spherical(4), WeightFunction::constant(2.5),
      WeightFunction::table({0.0, 0.5, 2.0}, {1.0, 0.5, 0.25})};
  for (const auto& w : weights)
    for (double s : {0.0, 0.1, 0.7, 1.0, 3.0, 25.0}) {
      const double q = integrate([&](double t) { return w(t); }, 0.0, s, 1e-13).value;
      EXPECT_NEAR(w.cumulative(s), q, 1e-11) << w.name() << " s=" << s;
    }
}

TEST(Weight, SphericalClosedForms) {
  const WeightFunction w2 = WeightFunction::spherical(2), w3 = WeightFunction::spherical(3);
  for (double s : {0.3, 1.0, 4.0}) {
    EXPECT_NEAR(w2.cumulative(s), s / std::sqrt(1 + s * s), 1e-15);
    EXPECT_NEAR(w3.cumulative(s), 0.5 * (std::atan(s) + s / (1 + s * s)), 1e-15);
  }
  EXPECT_NEAR(w2(1.0), std::pow(2.0, -1.5), 1e-15);
  EXPECT_EQ(w2.cumulative(-1.0), 0.0);
}

TEST(Weight, RejectsInvalid) {
  EXPECT_THROW(WeightFunction::spherical(0), GeometryError);
  EXPECT_THROW(WeightFunction::constant(0.0), GeometryError);
  EXPECT_THROW(WeightFunction::table({0.5}, {1.0}), GeometryError);
  EXPECT_THROW(WeightFunction::table({0.0, 1.0}, {1.0, -1.0}), GeometryError);
}

TEST(Weight, NamesAreDistinct) {
  EXPECT_NE(WeightFunction::constant(1.0).name(), WeightFunction::constant(2.0).name());
  EXPECT_EQ(WeightFunction::spherical(3).name(), "spherical(3)");
}
