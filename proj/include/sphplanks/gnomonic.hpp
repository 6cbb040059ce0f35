#ifndef SPHPLANKS_GNOMONIC_HPP
#define SPHPLANKS_GNOMONIC_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "sphplanks/convex_body.hpp"
#include "sphplanks/montecarlo.hpp"
#include "sphplanks/report.hpp"
#include "sphplanks/weight.hpp"

namespace sphplanks {

/// Tangency point e and an orthonormal basis of e^⊥ used as coordinates
/// of the Euclidean space E^n.
struct ProjectionFrame {
  UnitVector e;
  Eigen::MatrixXd basis;  // (n+1) x n

  /// Basis by Gram-Schmidt on the coordinate axes, lowest index first.
  static ProjectionFrame at(const UnitVector& e);
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Gnomonic map: x / <e, x> - e in frame coordinates. Requires <e, x> > 1e-9.
Eigen::VectorXd project_point(const ProjectionFrame& frame, const Eigen::VectorXd& x);
/// Inverse of project_point.
UnitVector unproject_point(const ProjectionFrame& frame, const Eigen::VectorXd& y);

/// Convex hull of finitely many points of E^n.
struct EuclideanPolytope {
  Eigen::MatrixXd vertices;  // n x k
  bool contains_origin = false;

  int dim() const { return static_cast<int>(vertices.rows()); }
};

/// Polytope from vertex columns; the origin test is the minimum-norm point
/// of the hull (distance <= 1e-10).
EuclideanPolytope make_polytope(const Eigen::MatrixXd& vertices);

/// Image of a body lying strictly inside the open hemisphere around e.
EuclideanPolytope project_body(const ProjectionFrame& frame, const ConvexBody& body);

/// The image of a great subsphere u^⊥ is the hyperplane {x : <u0, x> = t}
/// with u = tau e - sqrt(1 - tau^2) u0 and t = tau / sqrt(1 - tau^2).
struct HyperplaneParam {
  Eigen::VectorXd u0;
  double t = 0.0;
  double tau = 0.0;
};

HyperplaneParam hyperplane_param(const ProjectionFrame& frame, const Eigen::VectorXd& u);

/// h(P, u) = max over vertices of <vertex, u>.
template <typename Derived>
double support_function(const EuclideanPolytope& p, const Eigen::MatrixBase<Derived>& u) {
  double h = -std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < p.vertices.cols(); ++j) h = std::max(h, p.vertices.col(j).dot(u));
  return h;
}

/// nu_f-measure of the hyperplanes H(u, t), t >= 0, whose offset lies in
/// [-h(-u), h(u)]: F(max(0, h(u))) - F(max(0, -h(-u))), clamped at 0.
/// Reduces to F(h(u)) when the set contains the origin.
inline double uf_integrand(const WeightFunction& w, double h_plus, double h_minus) {
  const double upper = w.cumulative(std::max(0.0, h_plus));
  const double lower = w.cumulative(std::max(0.0, -h_minus));
  return std::max(0.0, upper - lower);
}

enum class UfMode { Auto, MonteCarlo, Quadrature };

/// U_f of a polytope, integrating over directions of S^{n-1}. Quadrature is
/// deterministic: exact piecewise integration between normal-fan breakpoints
/// for n = 2, a composite Gauss-Legendre product rule for n = 3 (error
/// estimated against half resolution). Auto picks quadrature for n = 2 and
/// Monte Carlo otherwise.
Estimate uf(const EuclideanPolytope& p, const WeightFunction& w, const McOptions& opt,
            UfMode mode = UfMode::Auto);

/// Monte Carlo U_f of any convex set given by its support function.
template <typename Support>
Estimate uf_mc(Support&& h, int n, const WeightFunction& w, const McOptions& opt) {
  if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "uf: dimension must be >= 2");
  const Accumulator acc = run_batches(opt, [&](Stream& s, std::size_t count, Accumulator& out) {
    SmallVector<double> u(n);
    for (std::size_t i = 0; i < count; ++i) {
      sample_uniform_sphere_into(s, u);
      const double hp = h(u);
      const double hm = h(SmallVector<double>(-u));
      out.add(uf_integrand(w, hp, hm));
    }
  });
  return scaled_estimate(acc, sphere_area(n - 1), opt, Quantity::Uf);
}

/// Frame centered at the circumcenter of K. Throws OutsideOpenHemisphere
/// when K is not inside an open hemisphere.
ProjectionFrame circumcenter_frame(const ConvexBody& body);

/// U(K) on the sphere against U_f(Pi(K)) with the spherical weight, at
/// three combined standard errors.
VerificationReport check_projection_consistency(const ConvexBody& body, const McOptions& opt);

}  // namespace sphplanks

#endif  // SPHPLANKS_GNOMONIC_HPP
