#include "wtomo/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wtomo/linalg.hpp"
#include "wtomo/states.hpp"

namespace wtomo {

namespace {

void check_mean_pairs(double mean_pairs) {
  if (!(mean_pairs > 0.0) || !std::isfinite(mean_pairs))
    throw InvalidMean("mean_pairs must be positive and finite, got " +
                      std::to_string(mean_pairs));
}

}  // namespace

CountVector simulate_counts(const MatrixXc& rho, const PovmSet& povm,
                            double mean_pairs, const RandomSource& rng,
                            CountRounding rounding) {
  check_mean_pairs(mean_pairs);
  if (povm.size() != 16)
    throw DimensionMismatch("simulate_counts: expected 16 POVM elements, got " +
                            std::to_string(povm.size()));
  const Eigen::VectorXd probs = born_probabilities(povm, rho);
  CountVector out;
  out.mean_pairs = mean_pairs;
  for (int alpha = 0; alpha < 16; ++alpha) {
    RandomSource stream = rng.derive({static_cast<std::uint64_t>(alpha)});
    const auto pairs = poisson_sample(mean_pairs, stream);
    double count = static_cast<double>(pairs) * probs[alpha];
    if (rounding == CountRounding::nearest_even) count = std::nearbyint(count);
    out.counts[alpha] = count;
  }
  return out;
}

CountVector expected_counts(const MatrixXc& sigma, const PovmSet& povm,
                            double mean_pairs) {
  check_mean_pairs(mean_pairs);
  if (povm.size() != 16)
    throw DimensionMismatch("expected_counts: expected 16 POVM elements, got " +
                            std::to_string(povm.size()));
  const Eigen::VectorXd probs = born_probabilities(povm, sigma);
  CountVector out;
  out.mean_pairs = mean_pairs;
  out.counts = mean_pairs * probs;
  return out;
}

double coincidence_probability(double theta, double eta) {
  // |0> is horizontal; the rotating analyzer starts at vertical, so
  // |theta> = cos(theta)|1> + sin(theta)|0>.
  Vector2c horizontal;
  horizontal << 1.0, 0.0;
  Vector2c analyzer;
  analyzer << std::sin(theta), std::cos(theta);
  const MatrixXc projector =
      kron(horizontal * horizontal.adjoint(), analyzer * analyzer.adjoint());
  const double p = (projector * werner_two_qubit(eta)).trace().real();
  return std::clamp(p, 0.0, 1.0);
}

CorrelationScan correlation_scan(double eta, double mean_pairs,
                                 const std::vector<double>& angles,
                                 const RandomSource& rng) {
  check_mean_pairs(mean_pairs);
  if (angles.empty())
    throw ParameterOutOfRange("correlation_scan: empty angle list");
  CorrelationScan scan;
  scan.eta = eta;
  scan.mean_pairs = mean_pairs;
  scan.angles = angles;
  scan.expected.reserve(angles.size());
  scan.noisy.reserve(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const double p = coincidence_probability(angles[k], eta);
    RandomSource stream = rng.derive({static_cast<std::uint64_t>(k)});
    const auto pairs = poisson_sample(mean_pairs, stream);
    scan.expected.push_back(mean_pairs * p);
    scan.noisy.push_back(static_cast<double>(pairs) * p);
  }
  return scan;
}

}  // namespace wtomo
