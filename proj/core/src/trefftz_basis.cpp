#include "vekua/trefftz_basis.hpp"

#include <cmath>
#include <string>

#include "vekua/errors.hpp"
#include "vekua/special_functions.hpp"

namespace vekua {

BasisSpec BasisSpec::laplace(int n_harmonics) {
  return BasisSpec(BasisMode::Laplace, n_harmonics);
}

BasisSpec BasisSpec::helmholtz(int n_harmonics, double wavenumber) {
  return BasisSpec(BasisMode::Helmholtz, n_harmonics, wavenumber);
}

BasisSpec::BasisSpec(BasisMode mode, int n_harmonics, std::optional<double> wavenumber)
    : mode_(mode), n_harmonics_(n_harmonics), wavenumber_(wavenumber) {
  if (n_harmonics_ < 1) {
    throw ConfigError("basis: n_harmonics must be >= 1, got " + std::to_string(n_harmonics_));
  }
  if (mode_ == BasisMode::Helmholtz) {
    if (!wavenumber_) {
      throw ConfigError("basis: Helmholtz mode requires a wavenumber");
    }
    if (!std::isfinite(*wavenumber_) || *wavenumber_ <= 0.0) {
      throw ConfigError("basis: wavenumber must be finite and > 0");
    }
  } else if (wavenumber_) {
    throw ConfigError("basis: Laplace mode does not take a wavenumber");
  }
}

PolarPoint cartesian_to_polar(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("cartesian_to_polar: non-finite coordinate");
  }
  // -0.0 + 0.0 == +0.0, so atan2 never returns -pi and the origin maps to 0.
  return {std::hypot(x, y), std::atan2(y + 0.0, x + 0.0)};
}

RowMatrix basis_values(const BasisSpec& spec, const SamplePoints& pts) {
  if (pts.x.size() != pts.y.size()) {
    throw DomainError("basis: x and y sample arrays differ in length");
  }
  const int n_max = spec.n_harmonics();
  const auto rows = static_cast<Eigen::Index>(pts.size());
  RowMatrix phi(rows, spec.size());

  for (Eigen::Index i = 0; i < rows; ++i) {
    const PolarPoint p = cartesian_to_polar(pts.x[i], pts.y[i]);
    if (spec.mode() == BasisMode::Laplace) {
      phi(i, 0) = 1.0;
      for (int n = 1; n <= n_max; ++n) {
        const double radial = std::pow(p.r, n);
        phi(i, 2 * n - 1) = radial * std::cos(n * p.theta);
        phi(i, 2 * n) = radial * std::sin(n * p.theta);
      }
    } else {
      const std::vector<double> radial = bessel_j_sequence(n_max, *spec.wavenumber() * p.r);
      phi(i, 0) = radial[0];
      for (int n = 1; n <= n_max; ++n) {
        phi(i, 2 * n - 1) = radial[n] * std::cos(n * p.theta);
        phi(i, 2 * n) = radial[n] * std::sin(n * p.theta);
      }
    }
  }
  return phi;
}

FeatureMatrix evaluate_basis(const BasisSpec& spec, const SamplePoints& pts) {
  if (pts.size() == 0) {
    throw EmptyDataError("basis: no sample points");
  }
  FeatureMatrix fm;
  fm.values = basis_values(spec, pts);
  const double rows = static_cast<double>(fm.values.rows());
  const Eigen::ArrayXd mean_square = fm.values.array().square().colwise().sum().transpose() / rows;
  fm.column_scales = (mean_square.sqrt() + 1e-12).matrix();
  return fm;
}

Eigen::MatrixXd FeatureMatrix::normalized() const {
  Eigen::MatrixXd out = values;
  out.array().rowwise() /= column_scales.transpose().array();
  return out;
}

}  // namespace vekua
