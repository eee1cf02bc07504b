#ifndef WTOMO_SIMULATE_HPP
#define WTOMO_SIMULATE_HPP

#include <vector>

#include "wtomo/povm.hpp"
#include "wtomo/random.hpp"
#include "wtomo/types.hpp"

namespace wtomo {

/// Coincidence counts for the 16 two-qubit outcomes, indexed by
/// outcome_index(). Counts are real-valued: each is an integer Poisson draw
/// times a Born probability, kept unrounded.
struct CountVector {
  Eigen::Matrix<double, 16, 1> counts = Eigen::Matrix<double, 16, 1>::Zero();
  double mean_pairs = 0.0;
};

enum class CountRounding {
  none,          // the raw product, generally non-integer
  nearest_even,  // round half to even, for physical integer counts
};

/// Noisy counts n_a = Pois(mean_pairs) * Tr(M_a rho), one independent draw
/// per outcome. Draws come from per-outcome substreams of `rng`, so the
/// result is a pure function of (rho, povm, mean_pairs, rng.seed()).
CountVector simulate_counts(const MatrixXc& rho, const PovmSet& povm,
                            double mean_pairs, const RandomSource& rng,
                            CountRounding rounding = CountRounding::none);

/// Noise-free counts c_a = mean_pairs * Tr(M_a sigma).
CountVector expected_counts(const MatrixXc& sigma, const PovmSet& povm,
                            double mean_pairs);

/// Coincidence probability with arm 1 fixed at horizontal (|0>) and arm 2
/// analyzing at angle theta from vertical: Tr[(P_H (x) P_theta) rho_W(eta)].
double coincidence_probability(double theta, double eta);

/// One polarization correlation scan: per angle, the expected coincidence
/// count and one Poisson-noised realization.
struct CorrelationScan {
  std::vector<double> angles;  // radians
  std::vector<double> expected;
  std::vector<double> noisy;
  double eta = 0.0;
  double mean_pairs = 0.0;
};

CorrelationScan correlation_scan(double eta, double mean_pairs,
                                 const std::vector<double>& angles,
                                 const RandomSource& rng);

}  // namespace wtomo

#endif  // WTOMO_SIMULATE_HPP
