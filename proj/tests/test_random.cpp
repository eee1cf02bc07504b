#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "wtomo/random.hpp"
#include "wtomo/types.hpp"

using namespace wtomo;

TEST_SUITE_BEGIN("random");

TEST_CASE("uniform stays in [0, 1) and is deterministic") {
  RandomSource a(99);
  RandomSource b(99);
  for (int k = 0; k < 1000; ++k) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform());
  }
}

TEST_CASE("derive gives reproducible, distinct substreams") {
  const RandomSource base(4242);
  RandomSource s1 = base.derive({1, 2, 3});
  RandomSource s2 = base.derive({1, 2, 3});
  RandomSource s3 = base.derive({1, 2, 4});
  CHECK(s1.seed() == s2.seed());
  CHECK(s1.seed() != s3.seed());
  for (int k = 0; k < 100; ++k) CHECK(s1.uniform() == s2.uniform());
}

TEST_CASE("poisson of mean zero is always zero") {
  RandomSource rng(1);
  for (int k = 0; k < 100; ++k) CHECK(poisson_sample(0.0, rng) == 0);
}

TEST_CASE("poisson rejects invalid means") {
  RandomSource rng(1);
  CHECK_THROWS_AS(poisson_sample(-1.0, rng), InvalidMean);
  CHECK_THROWS_AS(poisson_sample(std::numeric_limits<double>::quiet_NaN(), rng),
                  InvalidMean);
  CHECK_THROWS_AS(poisson_sample(std::numeric_limits<double>::infinity(), rng),
                  InvalidMean);
}

TEST_CASE("poisson sequences are seed-deterministic") {
  RandomSource a(777);
  RandomSource b(777);
  for (int k = 0; k < 500; ++k)
    CHECK(poisson_sample(10.0, a) == poisson_sample(10.0, b));
}

namespace {

void check_moments(double mean, int draws, std::uint64_t seed) {
  RandomSource rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double x = static_cast<double>(poisson_sample(mean, rng));
    CHECK(x >= 0.0);
    sum += x;
    sum_sq += x * x;
  }
  const double sample_mean = sum / draws;
  const double sample_var = sum_sq / draws - sample_mean * sample_mean;
  // 5-sigma bands. SE(mean) = sqrt(mean/n); Var of the sample variance of a
  // Poisson is ~ (mean + 2 mean^2)/n.
  const double mean_band = 5.0 * std::sqrt(mean / draws);
  const double var_band = 5.0 * std::sqrt((mean + 2.0 * mean * mean) / draws);
  CHECK(std::abs(sample_mean - mean) < mean_band);
  CHECK(std::abs(sample_var - mean) < var_band);
}

}  // namespace

TEST_CASE("poisson moments, small-mean branch") {
  check_moments(3.5, 200000, 11);
  check_moments(25.0, 200000, 12);
}

TEST_CASE("poisson moments, rejection branch") {
  check_moments(30.0, 200000, 13);
  check_moments(100.0, 200000, 14);
}

TEST_CASE("poisson mean 1000 over 1e5 draws lands within 1") {
  RandomSource rng(15);
  double sum = 0.0;
  const int draws = 100000;
  for (int k = 0; k < draws; ++k)
    sum += static_cast<double>(poisson_sample(1000.0, rng));
  // 5 sigma = 5 * sqrt(1000/1e5) = 0.5; assert the looser unit band.
  CHECK(std::abs(sum / draws - 1000.0) < 1.0);
}

TEST_CASE("branch boundary is statistically seamless") {
  // Means straddling the 30 cutoff should give near-identical statistics.
  RandomSource below(16);
  RandomSource above(17);
  const int draws = 200000;
  double sum_below = 0.0;
  double sum_above = 0.0;
  for (int k = 0; k < draws; ++k) {
    sum_below += static_cast<double>(poisson_sample(29.9, below));
    sum_above += static_cast<double>(poisson_sample(30.1, above));
  }
  const double band = 5.0 * std::sqrt(30.0 / draws) * 2.0;
  CHECK(std::abs((sum_above - sum_below) / draws - 0.2) < band);
}

TEST_CASE("gaussian moments") {
  RandomSource rng(18);
  const int draws = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double x = rng.gaussian();
    sum += x;
    sum_sq += x * x;
  }
  CHECK(std::abs(sum / draws) < 5.0 / std::sqrt(static_cast<double>(draws)));
  CHECK(std::abs(sum_sq / draws - 1.0) <
        5.0 * std::sqrt(2.0 / static_cast<double>(draws)));
}

TEST_SUITE_END();
