#include "sphplanks/convex_body.hpp"

#include <cmath>
#include <string>

#include "sphplanks/polyhedral.hpp"

namespace sphplanks {

namespace {

constexpr double kDualTol = 1e-9;

Eigen::MatrixXd normalized_columns(const Eigen::MatrixXd& m, int ambient, const char* what) {
  if (m.cols() > 0 && m.rows() != ambient)
    throw GeometryError(ErrorCode::DimensionMismatch,
                        std::string(what) + ": vectors must have " + std::to_string(ambient) +
                            " coordinates, got " + std::to_string(m.rows()));
  Eigen::MatrixXd out(ambient, m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double norm = m.col(j).norm();
    if (!(std::abs(norm - 1.0) <= 1e-9))
      throw GeometryError(ErrorCode::NotUnit, std::string(what) + "[" + std::to_string(j) +
                                                  "]: norm " + std::to_string(norm) + " is not 1");
    out.col(j) = m.col(j) / norm;
  }
  return out;
}

void check_ambient(int ambient) {
  if (ambient < 2 || ambient > kMaxAmbient)
    throw GeometryError(ErrorCode::UnsupportedDimension,
                        "ambient dimension " + std::to_string(ambient) + " unsupported (need 2..." +
                            std::to_string(kMaxAmbient) + ")");
}

}  // namespace

ConvexBody::ConvexBody(Eigen::MatrixXd normals, Eigen::MatrixXd generators, Representation source)
    : normals_(std::move(normals)),
      generators_(std::move(generators)),
      source_(source),
      ambient_(static_cast<int>(std::max(normals_.rows(), generators_.rows()))) {
  is_body_ = generators_.cols() > 0 && numerical_rank(generators_, kDualTol) == ambient_;
}

ConvexBody ConvexBody::from_normals(const Eigen::MatrixXd& normals) {
  const auto d = static_cast<int>(normals.rows());
  check_ambient(d);
  if (normals.cols() == 0)
    throw GeometryError(ErrorCode::NotInHemisphere, "from_normals: empty H-representation is the whole sphere");
  Eigen::MatrixXd gens = h_to_v(normals);
  return ConvexBody(normals, gens, Representation::H);
}

ConvexBody ConvexBody::from_generators(const Eigen::MatrixXd& generators) {
  const auto d = static_cast<int>(generators.rows());
  check_ambient(d);
  if (generators.cols() == 0)
    throw GeometryError(ErrorCode::InvalidArgument, "from_generators: empty V-representation");
  Eigen::MatrixXd normals = v_to_h(generators);
  if (normals.cols() == 0)
    throw GeometryError(ErrorCode::NotInHemisphere,
                        "from_generators: generators do not lie in a closed hemisphere");
  return ConvexBody(normals, unique_columns(generators), Representation::V);
}

ConvexBody ConvexBody::from_both(const Eigen::MatrixXd& normals, const Eigen::MatrixXd& generators) {
  if (normals.rows() != generators.rows())
    throw GeometryError(ErrorCode::DimensionMismatch, "from_both: representation dimensions differ");
  check_ambient(static_cast<int>(normals.rows()));
  if (normals.cols() == 0)
    throw GeometryError(ErrorCode::NotInHemisphere, "from_both: empty H-representation");
  const Eigen::MatrixXd cross = normals.transpose() * generators;
  if (cross.size() > 0 && cross.maxCoeff() > kDualTol)
    throw GeometryError(ErrorCode::InconsistentReps,
                        "from_both: <u_i, v_j> = " + std::to_string(cross.maxCoeff()) + " > 1e-9");
  return ConvexBody(normals, generators, Representation::Both);
}

ConvexBody ConvexBody::polar() const {
  ConvexBody p(generators_, normals_, source_);
  if (source_ == Representation::H) p.source_ = Representation::V;
  if (source_ == Representation::V) p.source_ = Representation::H;
  return p;
}

ConvexBody make_body(int n, const Eigen::MatrixXd& normals, const Eigen::MatrixXd& generators) {
  const int d = n + 1;
  check_ambient(d);
  const Eigen::MatrixXd h = normalized_columns(normals, d, "normals");
  const Eigen::MatrixXd v = normalized_columns(generators, d, "generators");
  if (h.cols() == 0 && v.cols() == 0)
    throw GeometryError(ErrorCode::InvalidArgument, "make_body: both representations empty");
  if (v.cols() == 0) return ConvexBody::from_normals(h);
  if (h.cols() == 0) return ConvexBody::from_generators(v);
  return ConvexBody::from_both(h, v);
}

ConvexBody convert_rep(const ConvexBody& body) {
  switch (body.source()) {
    case Representation::H:
      return ConvexBody::from_normals(body.normals());
    case Representation::V:
      return ConvexBody::from_generators(body.generators());
    case Representation::Both:
      break;
  }
  return ConvexBody::from_both(body.normals(), body.generators());
}

Inradius inradius(const ConvexBody& body) {
  if (!body.is_body())
    throw GeometryError(ErrorCode::NonBody, "inradius: set has no interior points");
  const MinNormPoint mnp = min_norm_point(body.normals());
  if (mnp.norm <= 1e-12)
    throw GeometryError(ErrorCode::NonBody, "inradius: origin lies in conv(normals)");
  Inradius out;
  const double s = std::min(mnp.norm, 1.0);
  out.radius = std::asin(s);
  out.center = UnitVector::normalize(-mnp.point);
  out.solver_gap = mnp.norm - mnp.lower_bound;
  return out;
}

Circumradius circumradius(const ConvexBody& body) {
  Circumradius out;
  if (body.is_empty()) throw GeometryError(ErrorCode::Degenerate, "circumradius: empty set");
  const MinNormPoint mnp = min_norm_point(body.generators());
  out.solver_gap = mnp.norm - mnp.lower_bound;
  if (mnp.norm <= 1e-12) {
    out.radius = kPi / 2;
    out.hemisphere = true;
    return out;
  }
  out.radius = std::acos(std::min(mnp.norm, 1.0));
  out.center = UnitVector::normalize(mnp.point);
  return out;
}

BodyMetrics metrics(const ConvexBody& body) {
  const Inradius in = inradius(body);
  const Circumradius circ = circumradius(body);
  BodyMetrics m;
  m.inradius = in.radius;
  m.incenter = in.center;
  m.circumradius = circ.radius;
  m.circumcenter = circ.center;
  m.hemisphere = circ.hemisphere;
  return m;
}

Lune make_lune(const UnitVector& u1, const UnitVector& u2) {
  if (u1.ambient() != u2.ambient())
    throw GeometryError(ErrorCode::DimensionMismatch, "make_lune: normals differ in dimension");
  const double dist = geodesic_distance(u1, u2);
  if (dist >= kPi - 1e-12)
    throw GeometryError(ErrorCode::NonBody, "make_lune: antipodal normals give an empty interior");
  Lune lune;
  lune.u1 = u1;
  lune.u2 = u2;
  lune.angle = kPi - dist;
  const int d = u1.ambient();
  Eigen::MatrixXd span(d, 2);
  span << u1.coords(), u2.coords();
  Eigen::MatrixXd ridge = orthogonal_complement(span, d);
  // Coincident normals: any (n-1)-subspace of u1^⊥ serves as ridge.
  lune.ridge_basis = ridge.leftCols(d - 2);
  lune.body = ConvexBody::from_normals(span);
  return lune;
}

Lune make_lune(const Eigen::MatrixXd& plane_basis, const Eigen::MatrixXd& ridge_basis,
               double theta_begin, double theta_end) {
  const double angle = theta_end - theta_begin;
  if (!(angle > 0.0 && angle <= kPi + 1e-12))
    throw GeometryError(ErrorCode::InvalidArgument, "make_lune: angular width must lie in (0, pi]");
  auto dir = [&](double t) -> Eigen::VectorXd {
    return std::cos(t) * plane_basis.col(0) + std::sin(t) * plane_basis.col(1);
  };
  Lune lune;
  lune.u1 = UnitVector::normalize(dir(theta_begin - kPi / 2));
  lune.u2 = UnitVector::normalize(dir(theta_end + kPi / 2));
  lune.angle = std::min(angle, kPi);
  lune.ridge_basis = ridge_basis;
  const int d = static_cast<int>(plane_basis.rows());
  Eigen::MatrixXd normals(d, 2);
  normals << lune.u1.coords(), lune.u2.coords();
  // Generators are known in closed form: the two boundary rays and +/- ridge.
  Eigen::MatrixXd gens(d, 2 + 2 * ridge_basis.cols());
  gens.col(0) = dir(theta_begin);
  gens.col(1) = dir(theta_end);
  for (Eigen::Index i = 0; i < ridge_basis.cols(); ++i) {
    gens.col(2 + 2 * i) = ridge_basis.col(i);
    gens.col(3 + 2 * i) = -ridge_basis.col(i);
  }
  if (angle >= kPi - 1e-12) {
    // Hemisphere: the two boundary rays are antipodal and span a line.
    lune.body = ConvexBody::from_normals(normals);
  } else {
    lune.body = ConvexBody::from_both(normals, gens);
  }
  return lune;
}

ConvexBody intersect_with_hemisphere(const ConvexBody& body, const SphericalCap& cap) {
  if (std::abs(cap.radius - kPi / 2) > 1e-12)
    throw GeometryError(ErrorCode::InvalidArgument, "intersect_with_hemisphere: cap radius must be pi/2");
  if (cap.center.ambient() != body.ambient())
    throw GeometryError(ErrorCode::DimensionMismatch, "intersect_with_hemisphere: dimension mismatch");
  Eigen::MatrixXd normals(body.ambient(), body.normals().cols() + 1);
  normals << body.normals(), -cap.center.coords();
  return ConvexBody::from_normals(normals);
}

ConvexBody octant(int n) {
  return ConvexBody::from_normals(-Eigen::MatrixXd::Identity(n + 1, n + 1));
}

ConvexBody hemisphere(const UnitVector& u) {
  return ConvexBody::from_normals(u.coords());
}

ConvexBody polytopal_cap(const SphericalCap& cap, int vertices) {
  const int d = cap.center.ambient();
  if (vertices < d)
    throw GeometryError(ErrorCode::InvalidArgument, "polytopal_cap: too few vertices");
  if (!(cap.radius > 0.0 && cap.radius < kPi / 2))
    throw GeometryError(ErrorCode::InvalidArgument, "polytopal_cap: radius must lie in (0, pi/2)");
  const Eigen::MatrixXd frame = complete_basis(cap.center.coords());
  Eigen::MatrixXd gens(d, vertices);
  Stream stream(0x5eedcafeULL);
  for (int k = 0; k < vertices; ++k) {
    Eigen::VectorXd w(d - 1);
    if (d == 3) {
      const double t = 2.0 * kPi * k / vertices;
      w << std::cos(t), std::sin(t);
    } else {
      sample_uniform_sphere_into(stream, w);
    }
    gens.col(k) = std::cos(cap.radius) * frame.col(0) +
                  std::sin(cap.radius) * (frame.rightCols(d - 1) * w);
  }
  return ConvexBody::from_generators(gens);
}

}  // namespace sphplanks
