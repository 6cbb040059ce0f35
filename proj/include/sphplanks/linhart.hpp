#ifndef SPHPLANKS_LINHART_HPP
#define SPHPLANKS_LINHART_HPP

#include <Eigen/Dense>

#include "sphplanks/gnomonic.hpp"
#include "sphplanks/montecarlo.hpp"
#include "sphplanks/report.hpp"
#include "sphplanks/weight.hpp"

namespace sphplanks {

struct Ball {
  Eigen::VectorXd center;
  double radius = 0.0;
};

/// Exact smallest enclosing ball by Welzl's move-to-front recursion.
/// Points are columns; duplicates are allowed.
Ball smallest_enclosing_ball(const Eigen::MatrixXd& points);

/// k-simplex, 1 <= k <= n, whose vertices lie on the sphere of radius R
/// about the origin and whose smallest enclosing ball is that ball.
class SimplexInBall {
 public:
  /// Validates vertex norms, affine independence and the enclosing ball
  /// (all within 1e-9).
  static SimplexInBall from_vertices(const Eigen::MatrixXd& vertices);

  double radius() const { return radius_; }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(vertices_.rows()); }
  int k() const { return static_cast<int>(vertices_.cols()) - 1; }
  Eigen::VectorXd vertex(int j) const { return vertices_.col(j); }

 private:
  double radius_ = 0.0;
  Eigen::MatrixXd vertices_;
};

/// Segment [-R d, R d].
SimplexInBall diameter_segment(const Eigen::VectorXd& direction, double R);
/// Regular k-simplex inscribed in the radius-R sphere of E^n.
SimplexInBall regular_simplex(int n, int k, double R);
/// Random k-simplex: vertices on the radius-R sphere of a random k-plane
/// through the origin, redrawn until the origin is interior to the hull.
SimplexInBall random_simplex(int n, int k, double R, Stream& stream);

/// u in the normal cone N(T, v_j): <u, v_i - v_j> <= 1e-12 for all i.
template <typename Derived>
bool normal_cone_membership(const SimplexInBall& s, int j, const Eigen::MatrixBase<Derived>& u) {
  if (j < 0 || j > s.k()) throw GeometryError(ErrorCode::InvalidArgument, "normal_cone_membership: bad vertex index");
  const auto& v = s.vertices();
  const double at_j = v.col(j).dot(u);
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    if (i != j && v.col(i).dot(u) - at_j > 1e-12) return false;
  return true;
}

/// C(R, f): the average of g(phi) = F(R cos phi) over a hemisphere of
/// S^{n-1}, reduced to
///   int_0^{pi/2} F(R cos phi) sin^{n-2} phi dphi / int_0^{pi/2} sin^{n-2} phi dphi.
double constant_C(double R, const WeightFunction& w, int n);

/// mu(S^{n-1}) C(R, f), the least value of U_f over convex sets whose
/// smallest enclosing ball is the radius-R ball.
double uf_lower_bound(double R, const WeightFunction& w, int n);

/// Average of g over the spherical image S_j against its average over the
/// hemisphere D_j = {<u, v_j> >= 0}. Passes when lhs + 3 stderr >= C(R, f);
/// extras report mu(S_j), containment violations of S_j in D_j, and the
/// equality slack lhs - rhs.
VerificationReport check_spherical_image_inequality(const SimplexInBall& s, int j, const WeightFunction& w,
                                                    const McOptions& opt);

/// Random convex polytope whose smallest enclosing ball is the radius-R
/// ball about the origin. Half the draws contain a diameter pair; the rest
/// are boundary points redrawn (up to 100 times) until the ball check holds.
EuclideanPolytope random_kb_instance(int n, double R, Stream& stream);

/// Compares U_f over `trials` random instances with U_f of a diameter
/// segment, and the segment value with uf_lower_bound.
VerificationReport min_uf_search(int n, double R, const WeightFunction& w, int trials, const McOptions& opt);

}  // namespace sphplanks

#endif  // SPHPLANKS_LINHART_HPP
