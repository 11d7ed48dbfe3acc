#pragma once

#include <cstdint>
#include <random>

namespace fgtool {

/// Seeded generator whose streams are identical on every platform: raw
/// mt19937_64 output plus rejection sampling, no std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= lim);
    return r % n;
  }

  bool chance_permille(unsigned p) { return below(1000) < p; }

private:
  std::mt19937_64 eng_;
};

} // namespace fgtool
