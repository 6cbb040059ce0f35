#ifndef SPHPLANKS_QUADRATURE_HPP
#define SPHPLANKS_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace sphplanks {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
QuadratureResult gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <typename F>
QuadratureResult adaptive(F& f, double a, double b, double tol, int depth) {
  const QuadratureResult whole = gk15(f, a, b);
  if (depth <= 0 || whole.error <= tol || std::abs(b - a) < 1e-15) return whole;
  const double mid = 0.5 * (a + b);
  const QuadratureResult left = adaptive(f, a, mid, 0.5 * tol, depth - 1);
  const QuadratureResult right = adaptive(f, mid, b, 0.5 * tol, depth - 1);
  return {left.value + right.value, left.error + right.error};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b] to absolute
/// tolerance `tol`.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double tol = 1e-10, int max_depth = 40) {
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, tol, max_depth);
    return {-r.value, r.error};
  }
  return detail::adaptive(f, a, b, tol, max_depth);
}

/// Integral over [a, b] split at the given interior breakpoints, where the
/// integrand may have kinks.
template <typename F>
QuadratureResult integrate_piecewise(F&& f, std::vector<double> breaks, double a, double b,
                                     double tol = 1e-10) {
  std::vector<double> cuts{a};
  std::sort(breaks.begin(), breaks.end());
  for (double t : breaks)
    if (t > cuts.back() + 1e-14 && t < b - 1e-14) cuts.push_back(t);
  cuts.push_back(b);
  QuadratureResult total;
  const double piece_tol = tol / static_cast<double>(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const QuadratureResult r = integrate(f, cuts[i], cuts[i + 1], piece_tol);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
  std::vector<double> nodes(order), weights(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return {nodes, weights};
}

}  // namespace sphplanks

#endif  // SPHPLANKS_QUADRATURE_HPP
