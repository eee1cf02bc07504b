#ifndef WTOMO_OPTIMIZE_HPP
#define WTOMO_OPTIMIZE_HPP

#include <functional>

#include <Eigen/Dense>

namespace wtomo {

struct NelderMeadOptions {
  int max_evaluations = 20000;
  /// Stop when every vertex is within this inf-norm distance of the best.
  double simplex_tol = 1e-9;
  /// ... or when f(worst) - f(best) falls below this spread.
  double fvalue_tol = 1e-12;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double fmin = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization with dimension-adaptive expansion,
/// contraction and shrink coefficients. Deterministic: no randomness, ties
/// resolved by stable ordering.
NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

}  // namespace wtomo

#endif  // WTOMO_OPTIMIZE_HPP
