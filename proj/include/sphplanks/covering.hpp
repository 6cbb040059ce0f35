#ifndef SPHPLANKS_COVERING_HPP
#define SPHPLANKS_COVERING_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sphplanks/convex_body.hpp"
#include "sphplanks/montecarlo.hpp"
#include "sphplanks/report.hpp"

namespace sphplanks {

/// Lunes sharing the ridge span(ridge_basis). Lune i holds the points whose
/// polar angle in span(plane_basis) lies in
/// [boundary_angles[i] - widening[i], boundary_angles[i+1] + widening[i]].
struct LuneFan {
  Eigen::MatrixXd plane_basis;  // d x 2
  Eigen::MatrixXd ridge_basis;  // d x (d-2)
  std::vector<double> boundary_angles;
  std::vector<double> widening;

  std::size_t size() const { return boundary_angles.size() - 1; }
  double lune_angle(std::size_t i) const {
    return boundary_angles[i + 1] - boundary_angles[i] + 2.0 * widening[i];
  }
  /// Sum of the lune inradii in angle arithmetic.
  double inradius_sum() const;
};

enum class Construction { LuneFan, PerturbedFan, Custom };

const char* to_string(Construction c);

struct CoveringInstance {
  SphericalCap ball;
  std::vector<ConvexBody> bodies;
  Construction construction = Construction::Custom;
  std::optional<LuneFan> fan;
  /// Lune inradii from angle arithmetic; empty for custom instances.
  std::vector<double> exact_inradii;

  int dim() const { return ball.center.dim(); }
};

/// Fan whose boundary angles span exactly 2 pi, covering S^n; the ball is
/// all of S^n (radius pi, centered at plane_basis.col(0)).
/// Errors: a gap above pi, or a wrap mismatch beyond 1e-12.
CoveringInstance make_lune_fan(int n, const Eigen::MatrixXd& plane_basis, const Eigen::MatrixXd& ridge_basis,
                               const std::vector<double>& boundary_angles);

/// Fan whose boundary angles span exactly pi. Its union is the hemisphere
/// centered at polar angle theta_0 + pi/2, which becomes the ball.
CoveringInstance make_half_fan(int n, const Eigen::MatrixXd& plane_basis, const Eigen::MatrixXd& ridge_basis,
                               const std::vector<double>& boundary_angles);

/// theta_0 followed by the partial sums of `gaps`.
std::vector<double> fan_angles_from_gaps(double theta0, const std::vector<double>& gaps);

/// Extends both sides of lune i by widening[i] >= 0 (each lune must stay
/// within angle pi). The result is tagged perturbed-fan; its exact inradii
/// grow by widening[i].
CoveringInstance widen_fan(const CoveringInstance& inst, const std::vector<double>& widening);
CoveringInstance widen_fan(const CoveringInstance& inst, double widening);

/// Deterministic check that the fan's angle intervals cover the ball's
/// angular range (full circle or the half-fan's half circle).
bool certify_fan_cover(const CoveringInstance& inst);

/// Samples uniformly in the ball and checks membership in some body
/// (tolerance 1e-12). Fails with up to 10 uncovered witnesses.
VerificationReport check_covering(const CoveringInstance& inst, const McOptions& opt);

/// sum r(K_i) >= r(B), within 1e-7. Lune fans use the exact inradii, other
/// instances the inradius solver. For r(B) = pi/2 a subcheck verifies
/// sum r(K_i ∩ B) >= pi/2. Throws NotCovering when check_covering fails;
/// the covering report is attached as a subcheck.
VerificationReport verify_covering_bound(const CoveringInstance& inst, const McOptions& opt);

/// Adds the cap B' of radius pi - r(B) at the antipode of B's center,
/// checks by sampling that B' and the bodies cover S^n, and compares
/// pi - r(B) + sum r(K_i) >= pi with the direct bound (agreement 1e-9).
/// At r(B) = pi the route is skipped and flagged.
VerificationReport verify_antipodal_argument(const CoveringInstance& inst, const McOptions& opt);

}  // namespace sphplanks

#endif  // SPHPLANKS_COVERING_HPP
