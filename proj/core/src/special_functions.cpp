#include "vekua/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "vekua/errors.hpp"

namespace vekua {
namespace {

// Powers of two keep rescaling exact.
constexpr double kRescaleThreshold = 0x1p+830;
constexpr double kRescaleFactor = 0x1p-830;

void check_arguments(int n, double x) {
  if (n < 0) {
    throw DomainError("bessel_j: negative order " + std::to_string(n));
  }
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("bessel_j: argument must be finite and >= 0");
  }
}

bool use_series(int n, double x) { return x <= 2.0 || x * x <= n + 1.0; }

// sum_m (-1)^m (x/2)^(2m+n) / (m! (m+n)!), terms formed recursively.
double power_series(int n, double x) {
  const double half = 0.5 * x;
  double lead = 1.0;
  for (int k = 1; k <= n; ++k) {
    lead *= half / k;
  }
  if (lead == 0.0) {
    return 0.0;
  }
  const double q = -half * half;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double term = lead;
  double sum = lead;
  for (int m = 1; m < 1000; ++m) {
    term *= q / (static_cast<double>(m) * static_cast<double>(m + n));
    sum += term;
    if (std::abs(term) <= 0.5 * eps * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

// Below this argument the recurrence starts from an order that depends on x
// alone, so every order shares one arithmetic path.
constexpr double kSharedStartLimit = 64.0;

// Highest order the recurrence must deliver; orders with x^2 <= n + 1 use
// the series instead.
int miller_top_order(int n_max, double x) {
  if (x <= kSharedStartLimit) {
    return std::min(n_max, static_cast<int>(std::ceil(x * x)));
  }
  return n_max;
}

int miller_start(int n_max, double x) {
  const int m = x <= kSharedStartLimit ? static_cast<int>(std::ceil(x * x))
                                       : std::max(n_max, static_cast<int>(std::ceil(x)));
  return m + static_cast<int>(std::ceil(std::sqrt(40.0 * m))) + 20;
}

// Fills out[0..n_max] with J_k(x) for x > 0.
void miller_recurrence(int n_max, double x, std::span<double> out) {
  const int start = miller_start(n_max, x);
  double next = 0.0;     // J_{k+1}, unnormalized
  double current = 1.0;  // J_k
  double norm = (start % 2 == 0) ? 2.0 * current : 0.0;

  for (int k = start; k > 0; --k) {
    const double previous = (2.0 * k / x) * current - next;
    next = current;
    current = previous;

    const int order = k - 1;
    if (order <= n_max) {
      out[order] = current;
    }
    if (order % 2 == 0) {
      norm += (order == 0 ? 1.0 : 2.0) * current;
    }
    if (std::abs(current) > kRescaleThreshold) {
      current *= kRescaleFactor;
      next *= kRescaleFactor;
      norm *= kRescaleFactor;
      for (int i = order; i <= n_max; ++i) {
        out[i] *= kRescaleFactor;
      }
    }
  }

  for (int i = 0; i <= n_max; ++i) {
    out[i] /= norm;
  }
}

}  // namespace

double bessel_j(int n, double x) {
  check_arguments(n, x);
  if (use_series(n, x)) {
    return power_series(n, x);
  }
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  miller_recurrence(n, x, values);
  return values[n];
}

std::vector<double> bessel_j_sequence(int n_max, double x) {
  check_arguments(n_max, x);
  std::vector<double> values(static_cast<std::size_t>(n_max) + 1);
  if (x > 2.0) {
    const int top = miller_top_order(n_max, x);
    miller_recurrence(top, x, std::span<double>(values).first(static_cast<std::size_t>(top) + 1));
  }
  for (int i = 0; i <= n_max; ++i) {
    if (use_series(i, x)) {
      values[i] = power_series(i, x);
    }
  }
  return values;
}

}  // namespace vekua
