#include "sphplanks/sphere.hpp"

#include "sphplanks/quadrature.hpp"

namespace sphplanks {

double cap_area(int n, double rho) {
  if (n < 1) throw GeometryError(ErrorCode::InvalidArgument, "cap_area: n must be >= 1");
  rho = std::clamp(rho, 0.0, kPi);
  const double ring = n == 1 ? 2.0 : sphere_area(n - 1);
  if (n == 1) return 2.0 * rho;
  const auto r = integrate([n](double t) { return std::pow(std::sin(t), n - 1); }, 0.0, rho, 1e-13);
  return ring * r.value;
}

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& A, int ambient, double tol) {
  // Orthonormalize the columns of A first, then extend with coordinate axes.
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    Eigen::VectorXd v = A.col(j);
    for (const auto& b : basis) v -= b.dot(v) * b;
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double norm = v.norm();
    if (norm > tol) basis.push_back(v / norm);
  }
  const std::size_t span_rank = basis.size();
  for (int i = 0; i < ambient && static_cast<int>(basis.size()) < ambient; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(ambient, i);
    for (const auto& b : basis) v -= b.dot(v) * b;
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double norm = v.norm();
    if (norm > 1e-6) basis.push_back(v / norm);
  }
  Eigen::MatrixXd out(ambient, static_cast<Eigen::Index>(basis.size() - span_rank));
  for (std::size_t k = span_rank; k < basis.size(); ++k)
    out.col(static_cast<Eigen::Index>(k - span_rank)) = basis[k];
  return out;
}

Eigen::MatrixXd complete_basis(const Eigen::VectorXd& first) {
  const int d = static_cast<int>(first.size());
  Eigen::MatrixXd out(d, d);
  out.col(0) = first.normalized();
  out.rightCols(d - 1) = orthogonal_complement(first, d);
  return out;
}

}  // namespace sphplanks
