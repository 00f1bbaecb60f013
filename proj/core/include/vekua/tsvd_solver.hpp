#pragma once

#include <Eigen/Core>

namespace vekua {

/// Relative spectral cutoff: singular values sigma_j <= rcond * sigma_max are
/// discarded. rcond = 0 keeps every nonzero singular value.
class TruncationPolicy {
 public:
  /// Throws ConfigError unless 0 <= rcond < 1.
  explicit TruncationPolicy(double rcond);

  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

/// Thin SVD A = U diag(s) V^T with s sorted non-increasing.
/// For an M x B matrix with K = min(M, B): U is M x K, V is B x K.
struct ThinSvd {
  Eigen::MatrixXd u;
  Eigen::VectorXd singular_values;
  Eigen::MatrixXd v;
  int sweeps = 0;
};

/// Householder QR followed by one-sided (Hestenes) Jacobi on the triangular
/// factor. Singular values come out with high relative accuracy.
///
/// Throws DomainError on non-finite entries and NumericalError (carrying the
/// sweep count) if the rotations have not converged after `max_sweeps`.
ThinSvd thin_svd(const Eigen::MatrixXd& a, int max_sweeps = 60);

struct LstsqSolution {
  Eigen::VectorXd weights;
  int effective_rank = 0;
  Eigen::VectorXd singular_values;
};

/// Minimum-norm solution of min ||A w - b|| restricted to the singular
/// directions with sigma_j > rcond * sigma_max (strict inequality):
///   w = V diag(1/sigma_j or 0) U^T b.
LstsqSolution tsvd_lstsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                         const TruncationPolicy& policy);

}  // namespace vekua
