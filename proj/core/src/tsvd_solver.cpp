#include "vekua/tsvd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "vekua/errors.hpp"

namespace vekua {
namespace {

// Orthogonalizes the columns of w by plane rotations; v accumulates them.
// Returns the number of sweeps used.
int one_sided_jacobi(Eigen::MatrixXd& w, Eigen::MatrixXd& v, int max_sweeps) {
  const Eigen::Index n = w.cols();
  v.setIdentity(n, n);
  const double tol = static_cast<double>(std::max<Eigen::Index>(w.rows(), 1)) *
                     std::numeric_limits<double>::epsilon();

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = w.col(p).squaredNorm();
        const double beta = w.col(q).squaredNorm();
        const double gamma = w.col(p).dot(w.col(q));
        if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;

        for (Eigen::Index i = 0; i < w.rows(); ++i) {
          const double wp = w(i, p);
          const double wq = w(i, q);
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) {
      return sweep;
    }
  }
  throw NumericalError("SVD: Jacobi rotations did not converge after " +
                           std::to_string(max_sweeps) + " sweeps",
                       static_cast<std::size_t>(max_sweeps));
}

// Requires rows >= cols.
ThinSvd tall_svd(const Eigen::MatrixXd& a, int max_sweeps) {
  const Eigen::Index m = a.rows();
  const Eigen::Index k = a.cols();

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd w = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  Eigen::MatrixXd v_r;
  const int sweeps = one_sided_jacobi(w, v_r, max_sweeps);

  Eigen::VectorXd sigma = w.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (sigma[j] > 0.0) {
      w.col(j) /= sigma[j];
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return sigma[i] > sigma[j]; });

  const Eigen::MatrixXd q_thin = qr.householderQ() * Eigen::MatrixXd::Identity(m, k);

  ThinSvd out;
  out.sweeps = sweeps;
  out.singular_values.resize(k);
  Eigen::MatrixXd u_r(k, k);
  out.v.resize(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    out.singular_values[j] = sigma[order[j]];
    u_r.col(j) = w.col(order[j]);
    out.v.col(j) = v_r.col(order[j]);
  }
  out.u = q_thin * u_r;
  return out;
}

}  // namespace

TruncationPolicy::TruncationPolicy(double rcond) : rcond_(rcond) {
  if (!(rcond >= 0.0 && rcond < 1.0)) {
    throw ConfigError("truncation policy: rcond must lie in [0, 1)");
  }
}

ThinSvd thin_svd(const Eigen::MatrixXd& a, int max_sweeps) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw DomainError("SVD: matrix has no rows or no columns");
  }
  if (!a.allFinite()) {
    throw DomainError("SVD: matrix has non-finite entries");
  }
  if (a.rows() >= a.cols()) {
    return tall_svd(a, max_sweeps);
  }
  ThinSvd t = tall_svd(a.transpose(), max_sweeps);
  std::swap(t.u, t.v);
  return t;
}

LstsqSolution tsvd_lstsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                         const TruncationPolicy& policy) {
  if (b.size() != a.rows()) {
    throw DomainError("tsvd_lstsq: right-hand side length " + std::to_string(b.size()) +
                      " does not match " + std::to_string(a.rows()) + " rows");
  }
  if (!b.allFinite()) {
    throw DomainError("tsvd_lstsq: right-hand side has non-finite entries");
  }
  const ThinSvd svd = thin_svd(a);
  const double cutoff = policy.rcond() * svd.singular_values[0];

  LstsqSolution sol;
  sol.singular_values = svd.singular_values;
  sol.weights = Eigen::VectorXd::Zero(a.cols());
  const Eigen::VectorXd projected = svd.u.transpose() * b;
  for (Eigen::Index j = 0; j < svd.singular_values.size(); ++j) {
    const double sigma = svd.singular_values[j];
    if (sigma > cutoff && sigma > 0.0) {
      sol.weights += svd.v.col(j) * (projected[j] / sigma);
      ++sol.effective_rank;
    }
  }
  return sol;
}

}  // namespace vekua
