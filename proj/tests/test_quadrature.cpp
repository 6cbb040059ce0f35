#include <gtest/gtest.h>

#include "sphplanks/quadrature.hpp"
#include "sphplanks/sphere.hpp"

using namespace sphplanks;

TEST(Integrate, SmoothFunctions) {
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, kPi).value, 2.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value, std::exp(1.0) - 1, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 1.0, 0.0).value, -1.0 / 3, 1e-14);
}

TEST(Integrate, KinkWithBreakpoints) {
  auto f = [](double x) { return std::abs(x - 0.3); };
  const double exact = 0.5 * 0.3 * 0.3 + 0.5 * 0.7 * 0.7;
  EXPECT_NEAR(integrate_piecewise(f, {0.3}, 0.0, 1.0, 1e-13).value, exact, 1e-13);
}

TEST(GaussLegendre, ExactForPolynomials) {
  for (int order : {1, 2, 5, 8, 16}) {
    const auto [x, w] = gauss_legendre(order);
    double sum_w = 0.0, moment = 0.0;
    const int deg = 2 * order - 2;
    for (int i = 0; i < order; ++i) {
      sum_w += w[i];
      moment += w[i] * std::pow(x[i], deg);
    }
    EXPECT_NEAR(sum_w, 2.0, 1e-13);
    EXPECT_NEAR(moment, 2.0 / (deg + 1), 1e-13) << "order " << order;
  }
}
