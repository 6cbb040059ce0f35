#ifndef SPHPLANKS_POLYHEDRAL_HPP
#define SPHPLANKS_POLYHEDRAL_HPP

#include <Eigen/Dense>

namespace sphplanks {

/// Nearest point to the origin in the convex hull of the columns of P.
struct MinNormPoint {
  Eigen::VectorXd point;
  Eigen::VectorXd weights;  // convex weights over the columns of P
  double norm = 0.0;
  /// Certified lower bound on the true minimum norm (Wolfe optimality gap).
  double lower_bound = 0.0;
  int iterations = 0;
};

/// Wolfe's minimum-norm-point algorithm. Terminates when
/// |x|^2 - min_j <x, p_j> <= tol * max_j |p_j|^2.
MinNormPoint min_norm_point(const Eigen::MatrixXd& points, double tol = 1e-15);

/// Polyhedral cone {x : <a_i, x> <= 0 for every column a_i} written as
/// cone(rays) + span(lineality).
struct ConeGenerators {
  Eigen::MatrixXd rays;       // unit columns, pairwise distinct, extreme
  Eigen::MatrixXd lineality;  // orthonormal columns
  int ambient = 0;

  /// All generators of the cone as unit columns: rays plus +/- lineality.
  Eigen::MatrixXd all_generators() const;
  bool is_zero_cone() const { return rays.cols() == 0 && lineality.cols() == 0; }
};

/// Double-description (Motzkin) enumeration of the extreme rays of
/// {x : A^T x <= 0}. Lineality is split off first so the incremental
/// phase runs on a pointed cone; adjacency uses the algebraic rank test.
/// Ambient dimension must be <= kMaxAmbient.
ConeGenerators double_description(const Eigen::MatrixXd& normals, double tol = 1e-9);

/// H-representation (facet normals) -> V-representation (generators).
Eigen::MatrixXd h_to_v(const Eigen::MatrixXd& normals, double tol = 1e-9);

/// V-representation -> H-representation; uses polarity, since the facet
/// normals of cone(V) generate the polar cone {u : V^T u <= 0}.
Eigen::MatrixXd v_to_h(const Eigen::MatrixXd& generators, double tol = 1e-9);

/// Removes columns within `tol` of an earlier column.
Eigen::MatrixXd unique_columns(const Eigen::MatrixXd& cols, double tol = 1e-9);

/// Numerical rank of a matrix (singular values above tol * max(1, s_max)).
int numerical_rank(const Eigen::MatrixXd& m, double tol = 1e-9);

}  // namespace sphplanks

#endif  // SPHPLANKS_POLYHEDRAL_HPP
