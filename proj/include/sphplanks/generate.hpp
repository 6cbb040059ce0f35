#ifndef SPHPLANKS_GENERATE_HPP
#define SPHPLANKS_GENERATE_HPP

#include <Eigen/Dense>

#include "sphplanks/convex_body.hpp"
#include "sphplanks/covering.hpp"
#include "sphplanks/random.hpp"

namespace sphplanks {

/// Haar-random orthogonal d x d matrix (QR of a Gaussian matrix with the
/// sign of R's diagonal fixed).
Eigen::MatrixXd random_orthogonal(int d, Stream& stream);

enum class BodyKind {
  /// Generators drawn in a cap of radius < pi/2; lies in an open hemisphere.
  GeneratorCap,
  /// Normals drawn in a cap of radius < pi/2 around -c; contains a cap around c.
  NormalCap,
};

/// Random polytopal body with interior points in S^n, 2 <= n <= 4.
ConvexBody random_body(int n, BodyKind kind, Stream& stream);

/// Alternates the two kinds by a fair coin.
ConvexBody random_body(int n, Stream& stream);

/// Lune with a random frame and the given dihedral angle in (0, pi].
Lune random_lune(int n, double angle, Stream& stream);

/// Random frame split into the plane (first two columns) and ridge parts.
struct FanFrame {
  Eigen::MatrixXd plane_basis;
  Eigen::MatrixXd ridge_basis;
};
FanFrame random_fan_frame(int n, Stream& stream);

/// m random gaps summing to `span`, each in [min_gap, max_gap]. Throws when
/// the bounds admit no split.
std::vector<double> random_gaps(int m, double span, double min_gap, double max_gap, Stream& stream);

}  // namespace sphplanks

#endif  // SPHPLANKS_GENERATE_HPP
