#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace vekua {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class BasisMode { Laplace, Helmholtz };

/// Which Trefftz family to use and its truncation order.
///
/// Laplace:   {1, r^n cos(n theta), r^n sin(n theta)}        solves  Δu = 0
/// Helmholtz: {J_0(kr), J_n(kr) cos(n theta), J_n(kr) sin(n theta)}
///                                                          solves  Δu + k²u = 0
class BasisSpec {
 public:
  static BasisSpec laplace(int n_harmonics);
  static BasisSpec helmholtz(int n_harmonics, double wavenumber);

  /// Validating constructor; throws ConfigError when `wavenumber` is missing
  /// for Helmholtz, present for Laplace, or non-positive.
  BasisSpec(BasisMode mode, int n_harmonics, std::optional<double> wavenumber = std::nullopt);

  BasisMode mode() const noexcept { return mode_; }
  int n_harmonics() const noexcept { return n_harmonics_; }
  std::optional<double> wavenumber() const noexcept { return wavenumber_; }

  /// 2N + 1.
  int size() const noexcept { return 2 * n_harmonics_ + 1; }

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;

 private:
  BasisMode mode_;
  int n_harmonics_;
  std::optional<double> wavenumber_;
};

/// Scattered Cartesian sample locations.
struct SamplePoints {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const noexcept { return x.size(); }
};

struct PolarPoint {
  double r;
  double theta;
};

/// r = hypot(x, y), theta = atan2(y, x) in (-pi, pi]; theta = 0 at the origin.
/// Throws DomainError for non-finite input.
PolarPoint cartesian_to_polar(double x, double y);

/// Raw basis evaluations plus per-column RMS scales.
///
/// Columns are ordered [phi_0, phi_1^c, phi_1^s, phi_2^c, phi_2^s, ...];
/// fitted coefficients index into this order.
struct FeatureMatrix {
  RowMatrix values;
  Eigen::VectorXd column_scales;

  /// values with column j divided by column_scales[j].
  Eigen::MatrixXd normalized() const;
};

/// M x (2N+1) basis evaluations without scales. Throws DomainError on
/// mismatched or non-finite coordinates.
RowMatrix basis_values(const BasisSpec& spec, const SamplePoints& pts);

/// Basis evaluations with column_scales[j] = sqrt(mean_i values(i, j)^2) + 1e-12.
/// Throws EmptyDataError when pts is empty.
FeatureMatrix evaluate_basis(const BasisSpec& spec, const SamplePoints& pts);

}  // namespace vekua
