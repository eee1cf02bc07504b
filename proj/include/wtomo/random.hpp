#ifndef WTOMO_RANDOM_HPP
#define WTOMO_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wtomo {

/// Mixes an index word into a running seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t word);

/// Seeded random stream. Identical seed and call sequence give identical
/// outputs on every platform: the engine is mt19937_64 (fully specified by
/// the standard) and all variates are derived from raw engine words here,
/// never through unspecified std distributions.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Independent substream keyed on (seed, indices); does not advance this
  /// stream. Parallel consumers each derive their own source.
  RandomSource derive(std::initializer_list<std::uint64_t> indices) const {
    std::uint64_t s = seed_;
    for (std::uint64_t w : indices) s = mix_seed(s, w);
    return RandomSource(s);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Poisson(mean) sample. Knuth multiplication below mean 30, PTRD
/// transformed rejection at and above; exact for the full range.
/// Throws InvalidMean for negative or non-finite mean.
std::int64_t poisson_sample(double mean, RandomSource& rng);

}  // namespace wtomo

#endif  // WTOMO_RANDOM_HPP
