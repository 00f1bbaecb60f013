#pragma once

#include <cstdint>
#include <random>

namespace vekua {

/// Seedable random stream used for noise, synthetic targets and network
/// initialization.
///
/// The engine is MT19937 seeded with a single 32-bit integer (the same
/// initialization as numpy's legacy `np.random.seed(int)`). Derived
/// quantities follow numpy's legacy RandomState exactly:
///  - uniform(): two 32-bit draws a, b -> ((a >> 5) * 2^26 + (b >> 6)) / 2^53,
///    a 53-bit double in [0, 1).
///  - standard_normal(): Marsaglia polar method on pairs of uniform() values
///    mapped to (-1, 1); the second variate of each pair is cached and
///    returned by the next call.
/// Streams are therefore reproducible across platforms and compilers, and a
/// given seed yields the same numbers numpy would.
class Random {
 public:
  explicit Random(std::uint32_t seed) : engine_(seed) {}

  double uniform();
  double uniform(double low, double high) { return low + (high - low) * uniform(); }
  double standard_normal();

 private:
  std::mt19937 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace vekua
