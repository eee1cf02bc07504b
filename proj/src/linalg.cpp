#include "wtomo/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace wtomo {

double hermiticity_defect(const MatrixXc& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const MatrixXc& a, double tol) {
  return hermiticity_defect(a) <= tol;
}

HermitianEigen hermitian_eig(const MatrixXc& a, double tol) {
  const double defect = hermiticity_defect(a);
  if (!(defect <= tol)) {
    throw NotHermitian("hermitian_eig: asymmetry " + std::to_string(defect) +
                       " exceeds tolerance " + std::to_string(tol));
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(a);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

MatrixXc sqrt_psd(const MatrixXc& a) {
  constexpr double kNegTol = 1e-9;
  HermitianEigen eig = hermitian_eig(a);
  Eigen::VectorXd roots(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -kNegTol)
      throw NotPsd("sqrt_psd: eigenvalue " + std::to_string(lambda) +
                   " below -1e-9");
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  MatrixXc result = eig.eigenvectors * roots.asDiagonal() *
                    eig.eigenvectors.adjoint();
  // V sqrt(L) V† is Hermitian in exact arithmetic; symmetrize the rounding.
  return 0.5 * (result + result.adjoint().eval());
}

MatrixXc matmul(const MatrixXc& a, const MatrixXc& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  return a * b;
}

MatrixXc adjoint(const MatrixXc& a) { return a.adjoint(); }

Complex trace(const MatrixXc& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("trace: matrix is not square");
  return a.trace();
}

MatrixXc identity(Eigen::Index d) { return MatrixXc::Identity(d, d); }

}  // namespace wtomo
