#ifndef WTOMO_METRICS_HPP
#define WTOMO_METRICS_HPP

#include "wtomo/types.hpp"

namespace wtomo {

struct FiguresOfMerit {
  double fidelity = 0.0;
  double purity = 0.0;
  double concurrence = 0.0;
};

/// Uhlmann fidelity (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2, in [0, 1].
double fidelity(const MatrixXc& sigma, const MatrixXc& rho);

/// Tr(rho^2).
double purity(const MatrixXc& rho);

/// Wootters concurrence of a two-qubit state:
/// C = max(0, l1 - l2 - l3 - l4) with l_k the decreasing square roots of the
/// eigenvalues of rho * (sy(x)sy) * conj(rho) * (sy(x)sy).
double concurrence(const MatrixXc& rho);

/// Closed form for the two-qubit Werner family: max(0, (3 eta - 1)/2).
double concurrence_werner_theory(double eta);

/// All three figures for an estimate `sigma` against the target `rho`.
FiguresOfMerit figures_of_merit(const MatrixXc& sigma, const MatrixXc& rho);

}  // namespace wtomo

#endif  // WTOMO_METRICS_HPP
