#include "wtomo/random.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wtomo/types.hpp"

namespace wtomo {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t word) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL + word * 0xD1342543DE82EF95ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double RandomSource::gaussian() {
  // Box-Muller; u1 in (0, 1] keeps the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

// Knuth multiplication method; cost grows linearly with the mean.
std::int64_t poisson_knuth(double mean, RandomSource& rng) {
  const double limit = std::exp(-mean);
  std::int64_t k = 0;
  double product = 1.0;
  do {
    ++k;
    product *= rng.uniform();
  } while (product > limit);
  return k - 1;
}

// Transformed rejection with decomposition (Hoermann's PTRD); valid for
// mean >= 10, used here from 30 up. No normal approximation involved:
// the acceptance test compares against the exact pmf.
std::int64_t poisson_ptrd(double mean, RandomSource& rng) {
  static const std::array<double, 10> log_factorial = {
      0.0,
      0.0,
      0.69314718055994531,
      1.79175946922805500,
      3.17805383034794562,
      4.78749174278204599,
      6.57925121201010100,
      8.52516136106541430,
      10.6046029027452502,
      12.8018274800814696};
  constexpr double log_sqrt_2pi = 0.91893853320467267;

  const double smu = std::sqrt(mean);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    double u;
    double v = rng.uniform();
    if (v <= 0.86 * v_r) {
      u = v / v_r - 0.43;
      return static_cast<std::int64_t>(std::floor(
          (2.0 * a / (0.5 - std::abs(u)) + b) * u + mean + 0.445));
    }

    if (v >= v_r) {
      u = rng.uniform() - 0.5;
    } else {
      u = v / v_r - 0.93;
      u = ((u < 0.0) ? -0.5 : 0.5) - u;
      v = rng.uniform() * v_r;
    }

    const double us = 0.5 - std::abs(u);
    if (us < 0.013 && v > us) continue;

    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.445);
    v = v * inv_alpha / (a / (us * us) + b);

    if (k >= 10.0) {
      if (std::log(v * smu) <=
          (k + 0.5) * std::log(mean / k) - mean - log_sqrt_2pi + k -
              (1.0 / 12.0 - 1.0 / (360.0 * k * k)) / k)
        return static_cast<std::int64_t>(k);
    } else if (k >= 0.0) {
      if (std::log(v) <=
          k * std::log(mean) - mean - log_factorial[static_cast<int>(k)])
        return static_cast<std::int64_t>(k);
    }
  }
}

}  // namespace

std::int64_t poisson_sample(double mean, RandomSource& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw InvalidMean("poisson_sample: mean = " + std::to_string(mean));
  if (mean == 0.0) return 0;
  return mean < 30.0 ? poisson_knuth(mean, rng) : poisson_ptrd(mean, rng);
}

}  // namespace wtomo
