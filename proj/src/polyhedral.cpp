#include "sphplanks/polyhedral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sphplanks/error.hpp"
#include "sphplanks/sphere.hpp"

namespace sphplanks {

namespace {

// Weights alpha (summing to one) minimizing |P_S alpha| over the affine hull
// of the selected columns.
Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& points, const std::vector<int>& active) {
  const auto k = static_cast<Eigen::Index>(active.size());
  Eigen::VectorXd alpha(k);
  if (k == 1) {
    alpha[0] = 1.0;
    return alpha;
  }
  const Eigen::VectorXd base = points.col(active[0]);
  Eigen::MatrixXd diffs(points.rows(), k - 1);
  for (Eigen::Index i = 1; i < k; ++i) diffs.col(i - 1) = points.col(active[i]) - base;
  const Eigen::VectorXd beta = diffs.colPivHouseholderQr().solve(-base);
  alpha.tail(k - 1) = beta;
  alpha[0] = 1.0 - beta.sum();
  return alpha;
}

}  // namespace

MinNormPoint min_norm_point(const Eigen::MatrixXd& points, double tol) {
  const Eigen::Index m = points.cols();
  if (m == 0) throw GeometryError(ErrorCode::InvalidArgument, "min_norm_point: empty point set");

  const Eigen::VectorXd sq = points.colwise().squaredNorm().transpose();
  const double scale = std::max(sq.maxCoeff(), 1e-300);
  Eigen::Index first = 0;
  sq.minCoeff(&first);

  std::vector<int> active{static_cast<int>(first)};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = points.col(first);

  MinNormPoint out;
  constexpr double kZero = 1e-14;
  for (int iter = 0; iter < 1000; ++iter) {
    out.iterations = iter + 1;
    if (x.squaredNorm() <= kZero * kZero * scale) break;
    const Eigen::VectorXd dots = points.transpose() * x;
    Eigen::Index j = 0;
    const double min_dot = dots.minCoeff(&j);
    if (x.squaredNorm() - min_dot <= tol * scale) break;
    if (std::find(active.begin(), active.end(), static_cast<int>(j)) != active.end()) break;
    active.push_back(static_cast<int>(j));
    lambda.push_back(0.0);

    for (int minor = 0; minor < 100; ++minor) {
      const Eigen::VectorXd alpha = affine_minimizer(points, active);
      if ((alpha.array() > kZero).all()) {
        for (std::size_t i = 0; i < active.size(); ++i) lambda[i] = alpha[static_cast<Eigen::Index>(i)];
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const double a = alpha[static_cast<Eigen::Index>(i)];
        if (a <= kZero) {
          const double den = lambda[i] - a;
          theta = std::min(theta, den > 0.0 ? lambda[i] / den : 0.0);
        }
      }
      theta = std::max(theta, 0.0);
      for (std::size_t i = 0; i < active.size(); ++i)
        lambda[i] = theta * alpha[static_cast<Eigen::Index>(i)] + (1.0 - theta) * lambda[i];
      // Drop vanished weights; always drop the smallest so the minor loop progresses.
      const auto smallest = std::min_element(lambda.begin(), lambda.end()) - lambda.begin();
      std::vector<int> kept_idx;
      std::vector<double> kept_w;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (static_cast<long>(i) == smallest || lambda[i] <= kZero) continue;
        kept_idx.push_back(active[i]);
        kept_w.push_back(lambda[i]);
      }
      if (kept_idx.empty()) {
        kept_idx.push_back(active[static_cast<std::size_t>(smallest)]);
        kept_w.push_back(1.0);
      }
      const double total = [&] {
        double s = 0.0;
        for (double w : kept_w) s += w;
        return s;
      }();
      for (double& w : kept_w) w /= total;
      active = std::move(kept_idx);
      lambda = std::move(kept_w);
    }
    x.setZero(points.rows());
    for (std::size_t i = 0; i < active.size(); ++i) x += lambda[i] * points.col(active[i]);
  }

  out.point = x;
  out.norm = x.norm();
  out.weights = Eigen::VectorXd::Zero(m);
  for (std::size_t i = 0; i < active.size(); ++i) out.weights[active[i]] = lambda[i];
  if (out.norm > 0.0) {
    const double min_dot = (points.transpose() * x).minCoeff();
    out.lower_bound = std::max(0.0, min_dot / out.norm);
  }
  return out;
}

int numerical_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() > 0 ? s[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cut) ++rank;
  return rank;
}

Eigen::MatrixXd unique_columns(const Eigen::MatrixXd& cols, double tol) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < cols.cols(); ++j) {
    bool dup = false;
    for (Eigen::Index k : keep)
      if ((cols.col(j) - cols.col(k)).lpNorm<Eigen::Infinity>() <= tol) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(j);
  }
  Eigen::MatrixXd out(cols.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = cols.col(keep[i]);
  return out;
}

Eigen::MatrixXd ConeGenerators::all_generators() const {
  Eigen::MatrixXd out(ambient, rays.cols() + 2 * lineality.cols());
  out.leftCols(rays.cols()) = rays;
  for (Eigen::Index i = 0; i < lineality.cols(); ++i) {
    out.col(rays.cols() + 2 * i) = lineality.col(i);
    out.col(rays.cols() + 2 * i + 1) = -lineality.col(i);
  }
  return out;
}

namespace {

struct Ray {
  Eigen::VectorXd y;
  std::vector<bool> active;  // constraint index -> tight at this ray
};

}  // namespace

ConeGenerators double_description(const Eigen::MatrixXd& normals, double tol) {
  const auto d = static_cast<int>(normals.rows());
  if (d < 1 || d > kMaxAmbient)
    throw GeometryError(ErrorCode::UnsupportedDimension,
                        "double_description: ambient dimension " + std::to_string(d) +
                            " outside [1, " + std::to_string(kMaxAmbient) + "]");
  const Eigen::Index m = normals.cols();
  ConeGenerators out;
  out.ambient = d;
  if (m == 0) {
    out.rays.resize(d, 0);
    out.lineality = Eigen::MatrixXd::Identity(d, d);
    return out;
  }

  // Split R^d into the lineality space ker(A^T) and the row space W.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(normals.transpose(), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv[0]);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++rank;
  const Eigen::MatrixXd V = svd.matrixV();
  const Eigen::MatrixXd W = V.leftCols(rank);
  out.lineality = V.rightCols(d - rank);

  // Constraints in row-space coordinates: the cone there is pointed.
  const Eigen::MatrixXd A = W.transpose() * normals;  // rank x m
  std::vector<Eigen::Index> basis;
  {
    Eigen::MatrixXd chosen(rank, 0);
    for (Eigen::Index j = 0; j < m && static_cast<int>(basis.size()) < rank; ++j) {
      Eigen::MatrixXd trial(rank, chosen.cols() + 1);
      trial.leftCols(chosen.cols()) = chosen;
      trial.col(chosen.cols()) = A.col(j);
      if (numerical_rank(trial, 1e-7) == trial.cols()) {
        chosen = trial;
        basis.push_back(j);
      }
    }
  }

  // Initial simplicial cone {y : B^T y <= 0} has rays -B^{-T}.
  Eigen::MatrixXd B(rank, rank);
  for (int k = 0; k < rank; ++k) B.col(k) = A.col(basis[static_cast<std::size_t>(k)]);
  const Eigen::MatrixXd initial = -B.transpose().fullPivLu().inverse();
  std::vector<bool> processed(static_cast<std::size_t>(m), false);
  for (Eigen::Index j : basis) processed[static_cast<std::size_t>(j)] = true;

  std::vector<Ray> rays;
  for (int k = 0; k < rank; ++k) {
    Ray r;
    r.y = initial.col(k).normalized();
    r.active.assign(static_cast<std::size_t>(m), false);
    for (int i = 0; i < rank; ++i)
      if (i != k) r.active[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = true;
    rays.push_back(std::move(r));
  }

  for (Eigen::Index c = 0; c < m; ++c) {
    if (processed[static_cast<std::size_t>(c)]) continue;
    const Eigen::VectorXd a = A.col(c);
    const double a_norm = std::max(a.norm(), 1e-300);
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const double v = a.dot(rays[k].y) / a_norm;
      if (v > tol) {
        plus.push_back(k);
      } else if (v < -tol) {
        minus.push_back(k);
        next.push_back(rays[k]);
      } else {
        Ray r = rays[k];
        r.active[static_cast<std::size_t>(c)] = true;
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        std::vector<Eigen::Index> common;
        for (Eigen::Index i = 0; i < m; ++i)
          if (processed[static_cast<std::size_t>(i)] && rays[p].active[static_cast<std::size_t>(i)] &&
              rays[q].active[static_cast<std::size_t>(i)])
            common.push_back(i);
        if (static_cast<int>(common.size()) < rank - 2) continue;
        Eigen::MatrixXd face(rank, static_cast<Eigen::Index>(common.size()));
        for (std::size_t i = 0; i < common.size(); ++i) face.col(static_cast<Eigen::Index>(i)) = A.col(common[i]);
        if (numerical_rank(face, 1e-7) != rank - 2) continue;
        const double vp = a.dot(rays[p].y);
        const double vq = a.dot(rays[q].y);
        Ray r;
        r.y = (vp * rays[q].y - vq * rays[p].y).normalized();
        r.active.assign(static_cast<std::size_t>(m), false);
        for (Eigen::Index i : common) r.active[static_cast<std::size_t>(i)] = true;
        r.active[static_cast<std::size_t>(c)] = true;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    processed[static_cast<std::size_t>(c)] = true;
  }

  Eigen::MatrixXd lifted(d, static_cast<Eigen::Index>(rays.size()));
  for (std::size_t k = 0; k < rays.size(); ++k)
    lifted.col(static_cast<Eigen::Index>(k)) = (W * rays[k].y).normalized();
  out.rays = unique_columns(lifted, tol);
  return out;
}

Eigen::MatrixXd h_to_v(const Eigen::MatrixXd& normals, double tol) {
  return double_description(normals, tol).all_generators();
}

Eigen::MatrixXd v_to_h(const Eigen::MatrixXd& generators, double tol) {
  return double_description(generators, tol).all_generators();
}

}  // namespace sphplanks
