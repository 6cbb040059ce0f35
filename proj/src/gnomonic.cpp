#include "sphplanks/gnomonic.hpp"

#include <vector>

#include "sphplanks/measure.hpp"
#include "sphplanks/polyhedral.hpp"
#include "sphplanks/quadrature.hpp"

namespace sphplanks {

namespace {

constexpr double kEquatorTol = 1e-9;

// Andrew's monotone chain; returns hull vertices counter-clockwise.
std::vector<Eigen::Vector2d> convex_hull_2d(const Eigen::MatrixXd& pts) {
  std::vector<Eigen::Vector2d> p;
  for (Eigen::Index j = 0; j < pts.cols(); ++j) p.emplace_back(pts(0, j), pts(1, j));
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a - o).x() * (b - o).y() - (a - o).y() * (b - o).x();
  };
  std::vector<Eigen::Vector2d> hull(2 * p.size());
  std::size_t k = 0;
  for (const auto& q : p) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

Estimate uf_planar(const EuclideanPolytope& p, const WeightFunction& w) {
  const std::vector<Eigen::Vector2d> hull = convex_hull_2d(p.vertices);
  std::vector<double> breaks;
  auto add_perpendiculars = [&](const Eigen::Vector2d& v) {
    if (v.norm() < 1e-300) return;
    const double a = std::atan2(v.y(), v.x());
    breaks.push_back(wrap_angle(a + kPi / 2));
    breaks.push_back(wrap_angle(a - kPi / 2));
  };
  for (std::size_t i = 0; i < hull.size(); ++i) {
    add_perpendiculars(hull[i]);
    if (hull.size() > 1) add_perpendiculars(hull[(i + 1) % hull.size()] - hull[i]);
  }
  auto integrand = [&](double theta) {
    const Eigen::Vector2d u(std::cos(theta), std::sin(theta));
    double hp = -std::numeric_limits<double>::infinity();
    double hm = hp;
    for (const auto& v : hull) {
      hp = std::max(hp, v.dot(u));
      hm = std::max(hm, -v.dot(u));
    }
    return uf_integrand(w, hp, hm);
  };
  const QuadratureResult r = integrate_piecewise(integrand, breaks, 0.0, 2.0 * kPi, 1e-11);
  return Estimate{r.value, r.error, breaks.size() + 1, 0, Quantity::Uf};
}

double uf_product_rule(const EuclideanPolytope& p, const WeightFunction& w, int panels) {
  const auto [nodes, weights] = gauss_legendre(8);
  double total = 0.0;
  const double dt = kPi / panels;
  const double dp = 2.0 * kPi / (2 * panels);
  for (int a = 0; a < panels; ++a) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double theta = dt * (a + 0.5 * (nodes[i] + 1.0));
      const double wt = 0.5 * dt * weights[i] * std::sin(theta);
      for (int b = 0; b < 2 * panels; ++b) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          const double phi = dp * (b + 0.5 * (nodes[j] + 1.0));
          const Eigen::Vector3d u(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                  std::cos(theta));
          const double hp = support_function(p, u);
          const double hm = support_function(p, Eigen::Vector3d(-u));
          total += wt * 0.5 * dp * weights[j] * uf_integrand(w, hp, hm);
        }
      }
    }
  }
  return total;
}

}  // namespace

ProjectionFrame ProjectionFrame::at(const UnitVector& e) {
  ProjectionFrame f;
  f.e = e;
  f.basis = orthogonal_complement(e.coords(), e.ambient());
  return f;
}

Eigen::VectorXd project_point(const ProjectionFrame& frame, const Eigen::VectorXd& x) {
  const double tau = frame.e.coords().dot(x);
  if (!(tau > kEquatorTol))
    throw GeometryError(ErrorCode::OutsideOpenHemisphere, "project_point: point not in the open hemisphere of e");
  return frame.basis.transpose() * x / tau;
}

UnitVector unproject_point(const ProjectionFrame& frame, const Eigen::VectorXd& y) {
  return UnitVector::normalize(frame.e.coords() + frame.basis * y);
}

EuclideanPolytope make_polytope(const Eigen::MatrixXd& vertices) {
  if (vertices.cols() == 0) throw GeometryError(ErrorCode::InvalidArgument, "make_polytope: no vertices");
  EuclideanPolytope p;
  p.vertices = vertices;
  p.contains_origin = min_norm_point(vertices).norm <= 1e-10;
  return p;
}

EuclideanPolytope project_body(const ProjectionFrame& frame, const ConvexBody& body) {
  const Eigen::MatrixXd& g = body.generators();
  if (g.cols() == 0) throw GeometryError(ErrorCode::Degenerate, "project_body: empty body");
  Eigen::MatrixXd verts(frame.dim(), g.cols());
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    if (!(frame.e.coords().dot(g.col(j)) > kEquatorTol))
      throw GeometryError(ErrorCode::OutsideOpenHemisphere,
                          "project_body: body is not strictly inside the open hemisphere of e");
    verts.col(j) = project_point(frame, g.col(j));
  }
  return make_polytope(verts);
}

HyperplaneParam hyperplane_param(const ProjectionFrame& frame, const Eigen::VectorXd& u) {
  const double tau = frame.e.coords().dot(u);
  if (tau < 0.0)
    throw GeometryError(ErrorCode::InvalidArgument, "hyperplane_param: u must satisfy <e, u> >= 0");
  const double s = std::sqrt(std::max(0.0, 1.0 - tau * tau));
  if (s < 1e-12) throw GeometryError(ErrorCode::InvalidArgument, "hyperplane_param: u = e has no hyperplane");
  HyperplaneParam out;
  out.tau = tau;
  out.t = tau / s;
  out.u0 = -(frame.basis.transpose() * (u - tau * frame.e.coords())) / s;
  out.u0.normalize();
  return out;
}

Estimate uf(const EuclideanPolytope& p, const WeightFunction& w, const McOptions& opt, UfMode mode) {
  const int n = p.dim();
  if (p.vertices.cols() == 0) throw GeometryError(ErrorCode::InvalidArgument, "uf: empty polytope");
  if (mode == UfMode::Auto) mode = n == 2 ? UfMode::Quadrature : UfMode::MonteCarlo;
  if (mode == UfMode::MonteCarlo)
    return uf_mc([&](const auto& u) { return support_function(p, u); }, n, w, opt);
  Estimate e;
  if (n == 2) {
    e = uf_planar(p, w);
  } else if (n == 3) {
    const double fine = uf_product_rule(p, w, 64);
    const double coarse = uf_product_rule(p, w, 32);
    e = Estimate{fine, std::abs(fine - coarse), static_cast<std::size_t>(64 * 128 * 64), 0, Quantity::Uf};
  } else {
    throw GeometryError(ErrorCode::UnsupportedDimension, "uf: quadrature mode needs n <= 3");
  }
  e.seed = opt.seed;
  return e;
}

ProjectionFrame circumcenter_frame(const ConvexBody& body) {
  const Circumradius c = circumradius(body);
  if (c.hemisphere || !c.center)
    throw GeometryError(ErrorCode::OutsideOpenHemisphere, "circumcenter_frame: body not inside an open hemisphere");
  return ProjectionFrame::at(*c.center);
}

VerificationReport check_projection_consistency(const ConvexBody& body, const McOptions& opt) {
  if (!body.is_body()) throw GeometryError(ErrorCode::NonBody, "check_projection_consistency: no interior");
  const ProjectionFrame frame = circumcenter_frame(body);
  const EuclideanPolytope image = project_body(frame, body);
  const Estimate sphere_side = mean_width_mc(body, sub_options(opt, 11));
  const Estimate flat_side = uf(image, WeightFunction::spherical(body.dim()), sub_options(opt, 12));

  VerificationReport r;
  r.claim = "projection_consistency";
  r.lhs = sphere_side;
  r.rhs = flat_side;
  r.slack = -std::abs(sphere_side.value - flat_side.value);
  r.tolerance = 3.0 * combined_sigma(sphere_side, flat_side);
  r.tolerance_rule = "|U(K) - U_f(Pi K)| <= 3 combined stderr, f = (1+t^2)^(-(n+1)/2)";
  r.samples = opt.samples;
  r.seed = opt.seed;
  r.extras = {{"circumradius", circumradius(body).radius}};
  if (image.contains_origin) r.flags.push_back("image_contains_origin");
  Digest dg;
  add_body(dg.add(r.claim), body).add(static_cast<std::uint64_t>(opt.samples)).add(opt.seed);
  r.inputs_digest = dg.hex();
  r.finalize();
  return r;
}

}  // namespace sphplanks
