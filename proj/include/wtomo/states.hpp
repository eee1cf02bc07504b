#ifndef WTOMO_STATES_HPP
#define WTOMO_STATES_HPP

#include "wtomo/types.hpp"

namespace wtomo {

// Two-qubit basis order is {|00>, |01>, |10>, |11>} with qubit 1 the left
// tensor factor; every module shares this convention.

/// Singlet Bell state (|01> - |10>)/sqrt(2).
Vector4c bell_singlet();

/// eta |Psi-><Psi-| + (1-eta)/4 * I4, for eta in [0, 1].
Matrix4c werner_two_qubit(double eta);

/// Flip (swap) operator on H_d (x) H_d: F(|a>(x)|b>) = |b>(x)|a>.
MatrixXc flip_operator(Eigen::Index d);

/// coef * F + zeta * I_{d^2} with zeta fixed by unit trace,
/// zeta = (1 - coef*d)/d^2. Throws NotPsd outside the physical range.
MatrixXc werner_general(double coef, Eigen::Index d);

/// Checks Hermiticity, unit trace and positive semi-definiteness (eigenvalues
/// >= -tol); returns the matrix unchanged or throws the named violation.
DensityMatrix validate_density(const MatrixXc& m, double tol = 1e-9);

}  // namespace wtomo

#endif  // WTOMO_STATES_HPP
