#include "sphplanks/generate.hpp"

#include <numeric>
#include <utility>

namespace sphplanks {

namespace {

int uniform_int(Stream& s, int lo, int hi) { return lo + static_cast<int>(s() % static_cast<std::uint64_t>(hi - lo + 1)); }

Eigen::MatrixXd points_in_cap(const SphericalCap& cap, int count, Stream& stream) {
  Eigen::MatrixXd p(cap.center.ambient(), count);
  Eigen::VectorXd x(cap.center.ambient());
  for (int j = 0; j < count; ++j) {
    sample_uniform_cap_into(cap, stream, x);
    p.col(j) = x;
  }
  return p;
}

}  // namespace

Eigen::MatrixXd random_orthogonal(int d, Stream& stream) {
  Eigen::MatrixXd g(d, d);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = stream.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i)
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  return q;
}

ConvexBody random_body(int n, BodyKind kind, Stream& stream) {
  if (n < 2 || n > kMaxAmbient - 1) throw GeometryError(ErrorCode::UnsupportedDimension, "random_body: need 2 <= n <= 4");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const UnitVector c = sample_uniform_sphere(n, stream);
    const int count = uniform_int(stream, n + 1, n + 6);
    try {
      if (kind == BodyKind::GeneratorCap) {
        const double rho = 0.3 + 1.1 * stream.uniform();
        ConvexBody b = ConvexBody::from_generators(points_in_cap(SphericalCap(c, rho), count, stream));
        if (b.is_body()) return b;
      } else {
        const double rho = 0.2 + 1.2 * stream.uniform();
        ConvexBody b = ConvexBody::from_normals(points_in_cap(SphericalCap(-c, rho), count, stream));
        if (b.is_body()) return b;
      }
    } catch (const GeometryError&) {
    }
  }
  throw GeometryError(ErrorCode::GenerationFailed, "random_body: no body after 1000 draws");
}

ConvexBody random_body(int n, Stream& stream) {
  return random_body(n, stream.uniform() < 0.5 ? BodyKind::GeneratorCap : BodyKind::NormalCap, stream);
}

FanFrame random_fan_frame(int n, Stream& stream) {
  const Eigen::MatrixXd q = random_orthogonal(n + 1, stream);
  return {q.leftCols(2), q.rightCols(n - 1)};
}

Lune random_lune(int n, double angle, Stream& stream) {
  const FanFrame f = random_fan_frame(n, stream);
  const double start = 2.0 * kPi * stream.uniform();
  return make_lune(f.plane_basis, f.ridge_basis, start, start + angle);
}

std::vector<double> random_gaps(int m, double span, double min_gap, double max_gap, Stream& stream) {
  if (m < 1 || m * min_gap > span || m * max_gap < span)
    throw GeometryError(ErrorCode::InvalidArgument, "random_gaps: bounds cannot produce the span");
  // Start every gap at min_gap and hand out the excess in random proportions,
  // capping at max_gap and redistributing the overflow among the rest.
  std::vector<double> g(static_cast<std::size_t>(m), min_gap);
  std::vector<std::size_t> free(g.size());
  std::iota(free.begin(), free.end(), std::size_t{0});
  double excess = span - m * min_gap;
  while (excess > 1e-14 * span && !free.empty()) {
    std::vector<double> w(free.size());
    for (auto& x : w) x = -std::log(1.0 - stream.uniform());
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    std::vector<std::size_t> still_free;
    double handed = 0.0;
    for (std::size_t t = 0; t < free.size(); ++t) {
      double& x = g[free[t]];
      const double add = std::min(excess * w[t] / total, max_gap - x);
      x += add;
      handed += add;
      if (x < max_gap) still_free.push_back(free[t]);
    }
    excess -= handed;
    free = std::move(still_free);
  }
  // Make the last gap absorb rounding so the angles wrap exactly.
  g.back() = span - std::accumulate(g.begin(), g.end() - 1, 0.0);
  return g;
}

}  // namespace sphplanks
