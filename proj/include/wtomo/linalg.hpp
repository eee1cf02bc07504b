#ifndef WTOMO_LINALG_HPP
#define WTOMO_LINALG_HPP

#include <Eigen/Dense>

#include "wtomo/types.hpp"

namespace wtomo {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are real and sorted
/// ascending; eigenvectors are the orthonormal columns of `eigenvectors`, so
/// a = eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint().
struct HermitianEigen {
  Eigen::VectorXd eigenvalues;
  MatrixXc eigenvectors;
};

/// Kronecker product: out(p*rb+q, r*cb+s) = a(p,r) * b(q,s).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index r = 0; r < a.cols(); ++r)
      out.block(p * b.rows(), r * b.cols(), b.rows(), b.cols()) =
          a(p, r) * b.derived();
  return out;
}

/// Max elementwise deviation from a = a†; infinity for non-square input.
double hermiticity_defect(const MatrixXc& a);

bool is_hermitian(const MatrixXc& a, double tol = 1e-10);

/// Throws NotHermitian when the defect of `a` exceeds `tol` (default 1e-10).
HermitianEigen hermitian_eig(const MatrixXc& a, double tol = 1e-10);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything below throws NotPsd.
MatrixXc sqrt_psd(const MatrixXc& a);

MatrixXc matmul(const MatrixXc& a, const MatrixXc& b);
MatrixXc adjoint(const MatrixXc& a);
Complex trace(const MatrixXc& a);

MatrixXc identity(Eigen::Index d);

}  // namespace wtomo

#endif  // WTOMO_LINALG_HPP
