#ifndef SPHPLANKS_SPHERE_HPP
#define SPHPLANKS_SPHERE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "sphplanks/error.hpp"
#include "sphplanks/random.hpp"

namespace sphplanks {

inline constexpr double kPi = std::numbers::pi;

/// Largest ambient dimension d = n + 1 handled by the polyhedral code.
inline constexpr int kMaxAmbient = 5;

/// Column vector with a compile-time capacity; used in sampling loops to
/// avoid heap traffic.
template <typename Scalar>
using SmallVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, kMaxAmbient + 1, 1>;

/// Total surface measure of the unit sphere S^n embedded in R^{n+1}.
template <typename Scalar = double>
Scalar sphere_area(int n) {
  if (n < 1) throw GeometryError(ErrorCode::InvalidArgument, "sphere_area: n must be >= 1");
  const Scalar half = Scalar(n + 1) / Scalar(2);
  return Scalar(2) * std::pow(Scalar(kPi), half) / std::tgamma(half);
}

/// Inner product clamped into [-1, 1].
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar clamped_dot(const Eigen::MatrixBase<DerivedA>& x,
                                      const Eigen::MatrixBase<DerivedB>& y) {
  using Scalar = typename DerivedA::Scalar;
  return std::clamp(x.dot(y), Scalar(-1), Scalar(1));
}

/// Angular distance between two points of the sphere.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar angle_between(const Eigen::MatrixBase<DerivedA>& x,
                                        const Eigen::MatrixBase<DerivedB>& y) {
  if (x.size() != y.size())
    throw GeometryError(ErrorCode::DimensionMismatch, "angle_between: dimension mismatch");
  return std::acos(clamped_dot(x, y));
}

/// Point of S^n. The stored coordinates have Euclidean norm 1.
class UnitVector {
 public:
  UnitVector() = default;

  /// Accepts `v` when | |v| - 1 | <= tol and renormalizes it.
  explicit UnitVector(const Eigen::VectorXd& v, double tol = 1e-12) : v_(v) {
    const double norm = v.norm();
    if (!(std::abs(norm - 1.0) <= tol))
      throw GeometryError(ErrorCode::NotUnit,
                          "UnitVector: norm " + std::to_string(norm) + " is not 1");
    v_ /= norm;
  }

  static UnitVector normalize(const Eigen::VectorXd& v) {
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw GeometryError(ErrorCode::InvalidArgument, "UnitVector: cannot normalize zero vector");
    return UnitVector(v / norm, 1e-9);
  }

  static UnitVector axis(int ambient, int i, double sign = 1.0) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(ambient);
    v[i] = sign;
    return UnitVector(v);
  }

  const Eigen::VectorXd& coords() const { return v_; }
  operator const Eigen::VectorXd&() const { return v_; }

  /// Ambient dimension n + 1.
  int ambient() const { return static_cast<int>(v_.size()); }
  /// Sphere dimension n.
  int dim() const { return ambient() - 1; }

  double operator[](Eigen::Index i) const { return v_[i]; }
  UnitVector operator-() const {
    UnitVector r;
    r.v_ = -v_;
    return r;
  }

 private:
  Eigen::VectorXd v_;
};

inline double geodesic_distance(const UnitVector& x, const UnitVector& y) {
  return angle_between(x.coords(), y.coords());
}

/// Closed spherical ball {x : d(x, center) <= radius}.
struct SphericalCap {
  UnitVector center;
  double radius = 0.0;

  SphericalCap() = default;
  SphericalCap(UnitVector c, double r) : center(std::move(c)), radius(r) {
    if (!(radius >= 0.0 && radius <= kPi))
      throw GeometryError(ErrorCode::InvalidArgument, "SphericalCap: radius outside [0, pi]");
  }

  int dim() const { return center.dim(); }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x, double tol = 1e-12) const {
    if (radius >= kPi) return true;
    return center.coords().dot(x) >= std::cos(radius) - tol;
  }
};

/// Writes a uniform point of S^{out.size()-1} into `out`.
template <typename Derived>
void sample_uniform_sphere_into(Stream& stream, Eigen::MatrixBase<Derived>& out) {
  for (;;) {
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = stream.normal();
    const auto norm = out.norm();
    if (norm > 1e-300) {
      out /= norm;
      return;
    }
  }
}

/// Uniform point of S^n (normalized standard Gaussian vector).
inline UnitVector sample_uniform_sphere(int n, Stream& stream) {
  if (n < 1) throw GeometryError(ErrorCode::InvalidArgument, "sample_uniform_sphere: n must be >= 1");
  Eigen::VectorXd v(n + 1);
  sample_uniform_sphere_into(stream, v);
  return UnitVector(v, 1e-12);
}

/// Uniform point of a cap by rejection from the whole sphere. Efficient for
/// the large caps (radius >= pi/2) this library covers; radius 0 returns the
/// center.
template <typename Derived>
void sample_uniform_cap_into(const SphericalCap& cap, Stream& stream,
                             Eigen::MatrixBase<Derived>& out) {
  if (cap.radius <= 0.0) {
    out = cap.center.coords();
    return;
  }
  const double threshold = std::cos(cap.radius);
  for (;;) {
    sample_uniform_sphere_into(stream, out);
    if (cap.radius >= kPi || cap.center.coords().dot(out) >= threshold) return;
  }
}

inline UnitVector sample_uniform_cap(const SphericalCap& cap, Stream& stream) {
  Eigen::VectorXd v(cap.center.ambient());
  sample_uniform_cap_into(cap, stream, v);
  return UnitVector(v, 1e-12);
}

/// Measure of a cap of angular radius rho in S^n, by quadrature of
/// sigma_{n-1} sin^{n-1}(t) over [0, rho].
double cap_area(int n, double rho);

/// Completes `first` (unit) to an orthonormal basis; column 0 of the result
/// is `first`. Remaining columns come from Gram-Schmidt on the coordinate
/// axes in index order.
Eigen::MatrixXd complete_basis(const Eigen::VectorXd& first);

/// Orthonormal basis of the orthogonal complement of span(columns of A),
/// as columns. Gram-Schmidt on coordinate axes, lowest index first.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& A, int ambient, double tol = 1e-9);

}  // namespace sphplanks

#endif  // SPHPLANKS_SPHERE_HPP
