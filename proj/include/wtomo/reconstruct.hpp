#ifndef WTOMO_RECONSTRUCT_HPP
#define WTOMO_RECONSTRUCT_HPP

#include <array>
#include <vector>

#include "wtomo/povm.hpp"
#include "wtomo/simulate.hpp"
#include "wtomo/types.hpp"

namespace wtomo {

/// The 16 real parameters of the lower-triangular factor T.
/// Layout: t[0..3] are the real diagonal T00, T11, T22, T33; the complex
/// off-diagonals follow as (re, im) pairs in the order
/// T10, T21, T32, T20, T31, T30.
struct CholeskyParams {
  std::array<double, 16> t{};
};

/// sigma = T†T / Tr(T†T); physical (Hermitian, PSD, unit trace) for any
/// parameter values. Throws DegenerateParams when Tr(T†T) <= 1e-30.
Matrix4c params_to_state(const CholeskyParams& params);

/// Inverse map. Rank-deficient input gets a 1e-12 ridge before
/// factorization, so the round trip is exact only to ~1e-5 there.
CholeskyParams state_to_params(const MatrixXc& sigma);

struct EstimatorConfig {
  int restarts = 5;
  int max_evaluations = 20000;  // per restart
  double simplex_tol = 1e-9;
  double fvalue_tol = 1e-12;
  double perturbation = 0.05;  // Gaussian sigma for restart start points
  /// Denominator guard in counts: chi^2 divides by max(c_a, count_floor).
  /// Keep it well below one count; a floor at or above the expected counts
  /// (which sit near N/16) flattens the weighting into plain least squares
  /// and measurably degrades near-pure reconstructions at small N.
  double count_floor = 0.01;
};

struct EstimationResult {
  Matrix4c sigma;
  double chi2 = 0.0;
  CholeskyParams params;
  long evaluations = 0;
  int restarts_used = 0;
  bool converged = false;
};

/// chi^2(t) = sum_a (n_a - c_a)^2 / max(c_a, floor) with
/// c_a = mean_pairs * Tr(M_a sigma(t)).
double chi_squared(const CholeskyParams& params, const CountVector& observed,
                   const PovmSet& povm, double count_floor = 0.01);

/// Deterministic restart start points for a config: the maximally mixed
/// state's parameters, then Gaussian perturbations of them.
std::vector<CholeskyParams> initial_points(const EstimatorConfig& config);

/// Minimizes chi^2 over the Cholesky parameters, best of all restarts
/// (ties broken toward the earlier restart). Never throws on valid counts;
/// a budget-exhausted search is reported through `converged`.
EstimationResult estimate(const CountVector& observed, const PovmSet& povm,
                          const EstimatorConfig& config = {});

}  // namespace wtomo

#endif  // WTOMO_RECONSTRUCT_HPP
