#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "vekua/trefftz_basis.hpp"
#include "vekua/tsvd_solver.hpp"

namespace vekua {

/// A fitted Vekua layer: u(x, y) ~ sum_j weights[j] * phi_j(x, y) / column_scales[j].
///
/// Scales are frozen at fit time and reused verbatim by predict(); weights
/// are coefficients against the RMS-normalized basis.
struct FittedModel {
  BasisSpec spec;
  Eigen::VectorXd column_scales;
  Eigen::VectorXd weights;
  int effective_rank = 0;
  double fit_seconds = 0.0;
};

/// Projects observations u at pts onto the Trefftz basis by truncated SVD.
///
/// fit_seconds covers basis assembly, normalization and the solve, measured
/// with a monotonic clock. Throws EmptyDataError for M = 0, DomainError when
/// u and pts disagree in length, and propagates basis/solver errors.
FittedModel fit(const BasisSpec& spec, const SamplePoints& pts, const std::vector<double>& u,
                const TruncationPolicy& policy);

std::vector<double> predict(const FittedModel& model, const SamplePoints& pts);

// Model files are line-oriented text:
//
//   vekua-model 1
//   mode helmholtz
//   n_harmonics 5
//   wavenumber 20
//   scales 11 <11 values>
//   weights 11 <11 values>
//
// `wavenumber` appears only for Helmholtz models. Values are written with
// 17 significant digits so a save/load cycle is bit-exact. effective_rank and
// fit_seconds are not persisted.
inline constexpr int kModelFormatVersion = 1;

void write_model(std::ostream& os, const FittedModel& model);
/// Throws ConfigError on malformed input or an unsupported format version.
FittedModel read_model(std::istream& is);

void save_model(const std::filesystem::path& path, const FittedModel& model);
FittedModel load_model(const std::filesystem::path& path);

}  // namespace vekua
