#pragma once

#include <vector>

namespace vekua {

/// Bessel function of the first kind J_n(x) for integer order n >= 0 and
/// real argument x >= 0.
///
/// Small arguments (x <= 2, or x^2 <= n + 1) use the ascending power series,
/// where no cancellation occurs. Everything else uses Miller's backward
/// recurrence normalized by J_0 + 2 * sum J_2m = 1, started from order
/// ceil(x^2) + ceil(sqrt(40 ceil(x^2))) + 20 for x <= 64 (from max(n, ceil(x))
/// beyond that). Accuracy is close to
/// machine precision: relative error below 1e-13 away from zeros of J_n and
/// absolute error below 1e-15 near them.
///
/// Throws DomainError for n < 0, x < 0 or non-finite x.
double bessel_j(int n, double x);

/// J_0(x), ..., J_{n_max}(x) from a single backward-recurrence pass.
///
/// For x <= 64 every element is bit-identical to bessel_j(i, x): the
/// recurrence start depends on x only, so both routes perform the same
/// arithmetic. Larger arguments agree to within rounding of the normalization.
std::vector<double> bessel_j_sequence(int n_max, double x);

}  // namespace vekua
