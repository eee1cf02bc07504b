#include "wtomo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wtomo/linalg.hpp"

namespace wtomo {

namespace {

Matrix4c spin_flip_matrix() {
  // sigma_y (x) sigma_y in the standard basis.
  Matrix4c yy = Matrix4c::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

double sum_clamped_sqrt(const Eigen::VectorXd& eigenvalues) {
  constexpr double kNegTol = 1e-9;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    if (eigenvalues[k] < -kNegTol)
      throw NotPsd("eigenvalue " + std::to_string(eigenvalues[k]) +
                   " below -1e-9");
    sum += std::sqrt(std::max(eigenvalues[k], 0.0));
  }
  return sum;
}

}  // namespace

double fidelity(const MatrixXc& sigma, const MatrixXc& rho) {
  if (sigma.rows() != rho.rows() || sigma.cols() != rho.cols())
    throw DimensionMismatch("fidelity: state dimensions differ");
  const MatrixXc root = sqrt_psd(sigma);
  MatrixXc inner = root * rho * root;
  inner = 0.5 * (inner + inner.adjoint().eval());
  const double tr = sum_clamped_sqrt(hermitian_eig(inner).eigenvalues);
  return std::clamp(tr * tr, 0.0, 1.0);
}

double purity(const MatrixXc& rho) {
  if (rho.rows() != rho.cols())
    throw DimensionMismatch("purity: matrix is not square");
  return (rho * rho).trace().real();
}

double concurrence(const MatrixXc& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionMismatch("concurrence: defined for 4x4 states only");
  const Matrix4c yy = spin_flip_matrix();
  const Matrix4c flipped = yy * rho.conjugate() * yy;
  // rho * flipped has a nonnegative real spectrum but is not Hermitian;
  // sqrt(rho) * flipped * sqrt(rho) shares the spectrum and is.
  const MatrixXc root = sqrt_psd(rho);
  MatrixXc product = root * flipped * root;
  product = 0.5 * (product + product.adjoint().eval());
  Eigen::VectorXd lambdas = hermitian_eig(product).eigenvalues;
  for (Eigen::Index k = 0; k < 4; ++k)
    lambdas[k] = std::sqrt(std::max(lambdas[k], 0.0));
  // Ascending order: the largest root minus the other three.
  const double c = lambdas[3] - lambdas[2] - lambdas[1] - lambdas[0];
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_werner_theory(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw ParameterOutOfRange("concurrence_werner_theory: eta = " +
                              std::to_string(eta) + " outside [0, 1]");
  return std::max(0.0, (3.0 * eta - 1.0) / 2.0);
}

FiguresOfMerit figures_of_merit(const MatrixXc& sigma, const MatrixXc& rho) {
  return {fidelity(sigma, rho), purity(sigma), concurrence(sigma)};
}

}  // namespace wtomo
