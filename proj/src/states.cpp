#include "wtomo/states.hpp"

#include <cmath>
#include <string>

#include "wtomo/linalg.hpp"

namespace wtomo {

Vector4c bell_singlet() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vector4c psi;
  psi << 0.0, inv_sqrt2, -inv_sqrt2, 0.0;
  return psi;
}

Matrix4c werner_two_qubit(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw ParameterOutOfRange("werner_two_qubit: eta = " + std::to_string(eta) +
                              " outside [0, 1]");
  const Vector4c psi = bell_singlet();
  return eta * (psi * psi.adjoint()) +
         ((1.0 - eta) / 4.0) * Matrix4c::Identity();
}

MatrixXc flip_operator(Eigen::Index d) {
  if (d < 2)
    throw ParameterOutOfRange("flip_operator: dimension must be >= 2");
  MatrixXc flip = MatrixXc::Zero(d * d, d * d);
  // F = sum_{i,j} |i><j| (x) |j><i|, i.e. F|j,i> = |i,j>.
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) flip(i * d + j, j * d + i) = 1.0;
  return flip;
}

MatrixXc werner_general(double coef, Eigen::Index d) {
  const double zeta = (1.0 - coef * static_cast<double>(d)) /
                      static_cast<double>(d * d);
  MatrixXc rho = coef * flip_operator(d) +
                 zeta * MatrixXc::Identity(d * d, d * d);
  return validate_density(rho);
}

DensityMatrix validate_density(const MatrixXc& m, double tol) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("validate_density: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol))
    throw NotHermitian("validate_density: asymmetry " +
                       std::to_string(defect) + " exceeds " +
                       std::to_string(tol));
  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (!(trace_err <= tol))
    throw TraceNotOne("validate_density: |trace - 1| = " +
                      std::to_string(trace_err));
  const HermitianEigen eig = hermitian_eig(m, tol);
  const double lambda_min = eig.eigenvalues.minCoeff();
  if (lambda_min < -tol)
    throw NotPsd("validate_density: eigenvalue " + std::to_string(lambda_min) +
                 " below " + std::to_string(-tol));
  return m;
}

}  // namespace wtomo
