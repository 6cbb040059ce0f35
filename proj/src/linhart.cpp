#include "sphplanks/linhart.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "sphplanks/polyhedral.hpp"
#include "sphplanks/quadrature.hpp"

namespace sphplanks {

namespace {

Ball ball_from_support(const std::vector<Eigen::VectorXd>& support, int dim) {
  if (support.empty()) return {Eigen::VectorXd::Zero(dim), -1.0};
  const Eigen::VectorXd& p0 = support.front();
  if (support.size() == 1) return {p0, 0.0};
  const auto k = static_cast<Eigen::Index>(support.size() - 1);
  Eigen::MatrixXd Q(dim, k);
  for (Eigen::Index i = 0; i < k; ++i) Q.col(i) = support[static_cast<std::size_t>(i + 1)] - p0;
  const Eigen::MatrixXd gram = Q.transpose() * Q;
  const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
  const Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXd c = p0 + Q * lambda;
  double r = 0.0;
  for (const auto& p : support) r = std::max(r, (p - c).norm());
  return {c, r};
}

bool inside(const Ball& b, const Eigen::VectorXd& p) {
  if (b.radius < 0.0) return false;
  return (p - b.center).norm() <= b.radius * (1.0 + 1e-12) + 1e-12;
}

Ball welzl(const std::vector<Eigen::VectorXd>& pts, std::size_t count, std::vector<Eigen::VectorXd>& support,
           int dim) {
  if (count == 0 || static_cast<int>(support.size()) == dim + 1) return ball_from_support(support, dim);
  const Eigen::VectorXd& p = pts[count - 1];
  Ball b = welzl(pts, count - 1, support, dim);
  if (inside(b, p)) return b;
  support.push_back(p);
  b = welzl(pts, count - 1, support, dim);
  support.pop_back();
  return b;
}

Eigen::MatrixXd random_orthonormal(int n, int k, Stream& stream) {
  Eigen::MatrixXd g(n, k);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = stream.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
}

struct ImageAccumulator {
  Accumulator g;
  std::size_t total = 0;
  std::size_t in_image = 0;
  std::size_t outside_hemisphere = 0;

  void merge(const ImageAccumulator& o) {
    g.merge(o.g);
    total += o.total;
    in_image += o.in_image;
    outside_hemisphere += o.outside_hemisphere;
  }
};

}  // namespace

Ball smallest_enclosing_ball(const Eigen::MatrixXd& points) {
  if (points.cols() == 0) throw GeometryError(ErrorCode::InvalidArgument, "smallest_enclosing_ball: no points");
  std::vector<Eigen::VectorXd> pts;
  for (Eigen::Index j = 0; j < points.cols(); ++j) pts.emplace_back(points.col(j));
  // Fixed-seed shuffle keeps the expected linear running time and the result deterministic.
  Stream stream(0xba11ULL);
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[stream() % i]);
  std::vector<Eigen::VectorXd> support;
  return welzl(pts, pts.size(), support, static_cast<int>(points.rows()));
}

SimplexInBall SimplexInBall::from_vertices(const Eigen::MatrixXd& vertices) {
  const auto n = vertices.rows();
  const auto count = vertices.cols();
  if (count < 2 || count > n + 1)
    throw GeometryError(ErrorCode::InvalidArgument, "SimplexInBall: need 2..n+1 vertices");
  const double R = vertices.col(0).norm();
  if (!(R > 0.0)) throw GeometryError(ErrorCode::Degenerate, "SimplexInBall: zero radius");
  for (Eigen::Index j = 0; j < count; ++j)
    if (std::abs(vertices.col(j).norm() - R) > 1e-9 * std::max(1.0, R))
      throw GeometryError(ErrorCode::InvalidArgument, "SimplexInBall: vertices must share one norm");
  Eigen::MatrixXd diffs = vertices.rightCols(count - 1).colwise() - vertices.col(0);
  if (numerical_rank(diffs / R, 1e-9) != count - 1)
    throw GeometryError(ErrorCode::Degenerate, "SimplexInBall: vertices are affinely dependent");
  const Ball b = smallest_enclosing_ball(vertices);
  if (b.center.norm() > 1e-9 * std::max(1.0, R) || std::abs(b.radius - R) > 1e-9 * std::max(1.0, R))
    throw GeometryError(ErrorCode::InvalidArgument,
                        "SimplexInBall: smallest enclosing ball is not the ball about the origin");
  SimplexInBall s;
  s.radius_ = R;
  s.vertices_ = vertices;
  return s;
}

SimplexInBall diameter_segment(const Eigen::VectorXd& direction, double R) {
  const Eigen::VectorXd d = direction.normalized();
  Eigen::MatrixXd v(d.size(), 2);
  v << R * d, -R * d;
  return SimplexInBall::from_vertices(v);
}

SimplexInBall regular_simplex(int n, int k, double R) {
  if (k < 1 || k > n) throw GeometryError(ErrorCode::InvalidArgument, "regular_simplex: need 1 <= k <= n");
  // Centered standard simplex in R^{k+1}, expressed in a basis of the
  // hyperplane sum(x) = 0.
  const Eigen::MatrixXd centered =
      Eigen::MatrixXd::Identity(k + 1, k + 1) - Eigen::MatrixXd::Constant(k + 1, k + 1, 1.0 / (k + 1));
  const Eigen::MatrixXd basis = orthogonal_complement(Eigen::VectorXd::Ones(k + 1), k + 1);
  Eigen::MatrixXd coords = basis.transpose() * centered;  // k x (k+1)
  coords *= R / coords.col(0).norm();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, k + 1);
  v.topRows(k) = coords;
  return SimplexInBall::from_vertices(v);
}

SimplexInBall random_simplex(int n, int k, double R, Stream& stream) {
  if (k < 1 || k > n) throw GeometryError(ErrorCode::InvalidArgument, "random_simplex: need 1 <= k <= n");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Eigen::MatrixXd frame = random_orthonormal(n, k, stream);
    Eigen::MatrixXd v(n, k + 1);
    for (int j = 0; j <= k; ++j) {
      Eigen::VectorXd w(k);
      sample_uniform_sphere_into(stream, w);
      v.col(j) = R * frame * w;
    }
    // Keep the origin well inside so the enclosing ball is unambiguous.
    const MinNormPoint mnp = min_norm_point(v);
    if (mnp.norm > 1e-12 * R || mnp.weights.minCoeff() < 0.02) continue;
    try {
      return SimplexInBall::from_vertices(v);
    } catch (const GeometryError&) {
    }
  }
  throw GeometryError(ErrorCode::GenerationFailed, "random_simplex: no valid simplex after 1000 draws");
}

double constant_C(double R, const WeightFunction& w, int n) {
  if (!(R > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "constant_C: R must be positive");
  if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "constant_C: n must be >= 2");
  const auto jac = [n](double phi) { return std::pow(std::sin(phi), n - 2); };
  const double num = integrate([&](double phi) { return w.cumulative(R * std::cos(phi)) * jac(phi); }, 0.0,
                               kPi / 2, 1e-12)
                         .value;
  const double den = integrate(jac, 0.0, kPi / 2, 1e-12).value;
  return num / den;
}

double uf_lower_bound(double R, const WeightFunction& w, int n) {
  return sphere_area(n - 1) * constant_C(R, w, n);
}

VerificationReport check_spherical_image_inequality(const SimplexInBall& s, int j, const WeightFunction& w,
                                                    const McOptions& opt) {
  if (j < 0 || j > s.k()) throw GeometryError(ErrorCode::InvalidArgument, "spherical image: bad vertex index");
  const int n = s.dim();
  const Eigen::VectorXd vj = s.vertex(j);
  const auto acc = run_batches<ImageAccumulator>(opt, [&](Stream& stream, std::size_t count, ImageAccumulator& out) {
    SmallVector<double> u(n);
    for (std::size_t i = 0; i < count; ++i) {
      sample_uniform_sphere_into(stream, u);
      ++out.total;
      if (!normal_cone_membership(s, j, u)) continue;
      ++out.in_image;
      const double h = vj.dot(u);  // = R cos(phi)
      if (h < 0.0) ++out.outside_hemisphere;
      out.g.add(w.cumulative(h));
    }
  });
  if (acc.in_image == 0)
    throw GeometryError(ErrorCode::Degenerate, "spherical image: no sample landed in S_j");

  const double mu = sphere_area(n - 1);
  VerificationReport r;
  r.claim = "spherical_image_inequality";
  r.lhs = scaled_estimate(acc.g, 1.0, opt, Quantity::SjAverage);
  r.rhs = Estimate::exact(constant_C(s.radius(), w, n));
  r.slack = r.lhs.value - r.rhs.value;
  r.tolerance = 3.0 * r.lhs.std_error;
  r.tolerance_rule = "mean_{S_j} g + 3 stderr >= C(R, f)";
  r.samples = opt.samples;
  r.seed = opt.seed;
  const double frac = static_cast<double>(acc.in_image) / static_cast<double>(acc.total);
  r.extras = {{"measure_Sj", mu * frac},
              {"measure_Sj_stderr", mu * std::sqrt(frac * (1.0 - frac) / static_cast<double>(acc.total))},
              {"measure_Dj", 0.5 * mu},
              {"Sj_outside_Dj", static_cast<double>(acc.outside_hemisphere)},
              {"equality_slack", r.slack},
              {"k", static_cast<double>(s.k())},
              {"vertex", static_cast<double>(j)}};
  if (std::abs(r.slack) <= r.tolerance) r.flags.push_back("equality_within_3sigma");
  Digest dg;
  dg.add(r.claim).add(s.vertices()).add(static_cast<std::uint64_t>(j)).add(w.name());
  dg.add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = dg.hex();

  VerificationReport containment;
  containment.claim = "Sj_subset_Dj";
  containment.lhs = Estimate::exact(static_cast<double>(acc.outside_hemisphere));
  containment.rhs = Estimate::exact(0.0);
  containment.slack = acc.outside_hemisphere ? -static_cast<double>(acc.outside_hemisphere) : 0.0;
  containment.tolerance = 0.0;
  containment.tolerance_rule = "no sampled direction of S_j outside D_j";
  containment.samples = opt.samples;
  containment.seed = opt.seed;
  containment.finalize();
  r.subchecks.push_back(containment);
  r.finalize();
  return r;
}

EuclideanPolytope random_kb_instance(int n, double R, Stream& stream) {
  auto uniform_in_ball = [&]() -> Eigen::VectorXd {
    Eigen::VectorXd d(n);
    sample_uniform_sphere_into(stream, d);
    return R * std::pow(stream.uniform(), 1.0 / n) * d;
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Eigen::VectorXd> pts;
    if (stream.uniform() < 0.5) {
      Eigen::VectorXd d(n);
      sample_uniform_sphere_into(stream, d);
      pts.push_back(R * d);
      pts.push_back(-R * d);
      const int extra = 1 + static_cast<int>(stream() % 4);
      for (int i = 0; i < extra; ++i) pts.push_back(uniform_in_ball());
    } else {
      const int boundary = n + 1 + static_cast<int>(stream() % 4);
      for (int i = 0; i < boundary; ++i) {
        Eigen::VectorXd d(n);
        sample_uniform_sphere_into(stream, d);
        pts.push_back(R * d);
      }
      const int interior = static_cast<int>(stream() % 3);
      for (int i = 0; i < interior; ++i) pts.push_back(uniform_in_ball());
    }
    Eigen::MatrixXd v(n, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = pts[i];
    const Ball b = smallest_enclosing_ball(v);
    if (b.center.norm() <= 1e-8 * R && std::abs(b.radius - R) <= 1e-8 * R) return make_polytope(v);
  }
  throw GeometryError(ErrorCode::GenerationFailed, "random_kb_instance: enclosing-ball check failed 100 times");
}

VerificationReport min_uf_search(int n, double R, const WeightFunction& w, int trials, const McOptions& opt) {
  if (trials < 1) throw GeometryError(ErrorCode::InvalidArgument, "min_uf_search: trials must be >= 1");
  const Eigen::VectorXd axis = Eigen::VectorXd::Unit(n, 0);
  Eigen::MatrixXd seg(n, 2);
  seg << R * axis, -R * axis;
  const Estimate segment = uf(make_polytope(seg), w, sub_options(opt, 100));
  const double bound = uf_lower_bound(R, w, n);

  VerificationReport r;
  r.claim = "segment_minimizes_uf";
  r.rhs = segment;
  r.samples = opt.samples;
  r.seed = opt.seed;
  double best_margin = std::numeric_limits<double>::infinity();
  double min_value = std::numeric_limits<double>::infinity();
  int with_pair = 0;
  Stream gen(derive_seed(opt.seed, 200));
  for (int t = 0; t < trials; ++t) {
    Stream instance_stream = gen.split(static_cast<std::uint64_t>(t));
    const EuclideanPolytope p = random_kb_instance(n, R, instance_stream);
    const Estimate value = uf(p, w, sub_options(opt, 1000 + static_cast<std::uint64_t>(t)));
    const double margin = value.value - segment.value;
    const double tol = 3.0 * combined_sigma(value, segment);
    min_value = std::min(min_value, value.value);
    if (p.vertices.cols() >= 2 && (p.vertices.col(0) + p.vertices.col(1)).norm() < 1e-12 * R) ++with_pair;
    if (margin + tol < best_margin) {
      best_margin = margin + tol;
      r.lhs = value;
      r.slack = margin;
      r.tolerance = tol;
    }
  }
  r.tolerance_rule = "every U_f(K) >= U_f(segment) - 3 combined stderr";
  r.extras = {{"segment_value", segment.value}, {"lower_bound", bound}, {"min_value", min_value},
              {"trials", static_cast<double>(trials)}, {"instances_with_diameter_pair", static_cast<double>(with_pair)}};

  VerificationReport match;
  match.claim = "segment_equals_lower_bound";
  match.lhs = segment;
  match.rhs = Estimate::exact(bound);
  match.slack = -std::abs(segment.value - bound);
  match.tolerance = 3.0 * segment.std_error + 1e-8;
  match.tolerance_rule = "|U_f(segment) - mu(S^{n-1}) C(R, f)| <= 3 stderr + 1e-8 quadrature";
  match.samples = opt.samples;
  match.seed = opt.seed;
  match.finalize();
  r.subchecks.push_back(match);

  Digest dg;
  dg.add(r.claim).add(static_cast<std::uint64_t>(n)).add(R).add(w.name()).add(static_cast<std::uint64_t>(trials));
  dg.add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = dg.hex();
  r.finalize();
  return r;
}

}  // namespace sphplanks
