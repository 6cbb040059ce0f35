#ifndef SPHPLANKS_CONVEX_BODY_HPP
#define SPHPLANKS_CONVEX_BODY_HPP

#include <optional>

#include <Eigen/Dense>

#include "sphplanks/sphere.hpp"

namespace sphplanks {

/// Which representation the body was built from.
enum class Representation { H, V, Both };

/// Spherically convex set K = S^n ∩ C for a polyhedral cone C, held in both
/// representations:
///   H: K = {x : <u_i, x> <= 0}  (columns u_i of normals())
///   V: K = S^n ∩ pos(v_j)       (columns v_j of generators())
/// With this sign convention the polar body is the representation swap.
class ConvexBody {
 public:
  ConvexBody() = default;

  /// Builds from facet poles; generators are computed by double description.
  static ConvexBody from_normals(const Eigen::MatrixXd& normals);
  /// Builds from generators; normals are computed by double description.
  /// Throws NotInHemisphere when pos(generators) is all of R^{n+1}.
  static ConvexBody from_generators(const Eigen::MatrixXd& generators);
  /// Takes both representations and checks <u_i, v_j> <= 1e-9.
  static ConvexBody from_both(const Eigen::MatrixXd& normals, const Eigen::MatrixXd& generators);

  int ambient() const { return ambient_; }
  int dim() const { return ambient_ - 1; }
  const Eigen::MatrixXd& normals() const { return normals_; }
  const Eigen::MatrixXd& generators() const { return generators_; }
  Representation source() const { return source_; }

  /// Interior points exist (the cone is full dimensional).
  bool is_body() const { return is_body_; }
  /// The cone is {0}: no points on the sphere.
  bool is_empty() const { return generators_.cols() == 0; }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x, double tol = 1e-12) const {
    for (Eigen::Index i = 0; i < normals_.cols(); ++i)
      if (normals_.col(i).dot(x) > tol) return false;
    return !is_empty();
  }

  /// Whether the great subsphere u^⊥ meets K: false iff every generator is
  /// strictly on one side. Exact for bodies with interior points.
  template <typename Derived>
  bool hyperplane_meets(const Eigen::MatrixBase<Derived>& u) const {
    bool pos = false, neg = false;
    for (Eigen::Index j = 0; j < generators_.cols(); ++j) {
      const double s = generators_.col(j).dot(u);
      if (s >= 0.0) pos = true;
      if (s <= 0.0) neg = true;
      if (pos && neg) return true;
    }
    return false;
  }

  /// K* = {u : <u, v> <= 0 for all v in K}; need not have interior points.
  ConvexBody polar() const;

 private:
  ConvexBody(Eigen::MatrixXd normals, Eigen::MatrixXd generators, Representation source);

  Eigen::MatrixXd normals_;
  Eigen::MatrixXd generators_;
  Representation source_ = Representation::Both;
  int ambient_ = 0;
  bool is_body_ = false;
};

/// Validating constructor: checks dimension n+1 and unit length (1e-9),
/// renormalizes, and fills the missing representation.
ConvexBody make_body(int n, const Eigen::MatrixXd& normals, const Eigen::MatrixXd& generators);

/// Both representations recomputed from the source one and cross-checked.
ConvexBody convert_rep(const ConvexBody& body);

/// Inscribed-ball solution.
struct Inradius {
  double radius = 0.0;
  UnitVector center;
  /// Certified bound on |s - s*| where s = sin(radius).
  double solver_gap = 0.0;
};

struct Circumradius {
  double radius = 0.0;
  std::optional<UnitVector> center;
  /// Set when K is not inside an open hemisphere; radius is then pi/2.
  bool hemisphere = false;
  double solver_gap = 0.0;
};

struct BodyMetrics {
  double inradius = 0.0;
  UnitVector incenter;
  double circumradius = 0.0;
  std::optional<UnitVector> circumcenter;
  bool hemisphere = false;
  double solver_tolerance = 1e-9;
};

/// Largest cap inside K. Solves max s s.t. <u_i, x> + s <= 0, |x| <= 1
/// through its minimax dual: s* is the distance from the origin to
/// conv{u_i}, and x* points away from the nearest point.
/// Throws NonBody when K has no interior.
Inradius inradius(const ConvexBody& body);

/// Smallest cap containing K. Solves max c s.t. <v_j, e> >= c, |e| <= 1;
/// c* is the distance from the origin to conv{v_j}.
Circumradius circumradius(const ConvexBody& body);

BodyMetrics metrics(const ConvexBody& body);

/// Intersection of S^n with two closed halfspaces.
struct Lune {
  UnitVector u1, u2;
  /// Interior dihedral angle in (0, pi].
  double angle = 0.0;
  /// Orthonormal columns spanning an (n-1)-subspace of u1^⊥ ∩ u2^⊥.
  Eigen::MatrixXd ridge_basis;
  ConvexBody body;

  double inradius() const { return 0.5 * angle; }
};

Lune make_lune(const UnitVector& u1, const UnitVector& u2);

/// Lune of the points whose projection to span(plane_basis) has polar angle
/// in [theta_begin, theta_end]. plane_basis is d x 2 orthonormal and
/// ridge_basis spans its orthogonal complement.
Lune make_lune(const Eigen::MatrixXd& plane_basis, const Eigen::MatrixXd& ridge_basis,
               double theta_begin, double theta_end);

/// K ∩ cap for a cap of radius pi/2: adds the normal -center.
ConvexBody intersect_with_hemisphere(const ConvexBody& body, const SphericalCap& cap);

/// Positive orthant {x_i >= 0} of S^n.
ConvexBody octant(int n);
/// Closed hemisphere {<u, x> <= 0}.
ConvexBody hemisphere(const UnitVector& u);
/// Polytope whose generators are `vertices` points on the boundary circle of
/// the cap (n = 2) or a deterministic near-uniform set on it (n > 2).
ConvexBody polytopal_cap(const SphericalCap& cap, int vertices);

}  // namespace sphplanks

#endif  // SPHPLANKS_CONVEX_BODY_HPP
