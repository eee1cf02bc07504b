#include "wtomo/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wtomo/linalg.hpp"

namespace wtomo {

std::array<Vector2c, 4> sic_vectors() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = std::sqrt(2.0 / 3.0);
  const auto phase = [](double angle) {
    return Complex(std::cos(angle), std::sin(angle));
  };
  std::array<Vector2c, 4> phi;
  phi[0] << 1.0, 0.0;
  phi[1] << a, b;
  phi[2] << a, b * phase(2.0 * std::numbers::pi / 3.0);
  phi[3] << a, b * phase(4.0 * std::numbers::pi / 3.0);
  return phi;
}

PovmSet sic_povm() {
  PovmSet povm;
  int k = 1;
  for (const Vector2c& phi : sic_vectors()) {
    povm.elements.emplace_back(0.5 * (phi * phi.adjoint()));
    povm.labels.push_back(std::to_string(k++));
  }
  return povm;
}

PovmSet two_qubit_povm() {
  const PovmSet single = sic_povm();
  PovmSet povm;
  povm.elements.reserve(16);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      povm.elements.push_back(kron(single.elements[i - 1], single.elements[j - 1]));
      povm.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return povm;
}

Eigen::VectorXd born_probabilities(const PovmSet& povm, const MatrixXc& rho) {
  constexpr double kClampTol = 1e-12;
  if (rho.rows() != rho.cols() || rho.rows() != povm.dim())
    throw DimensionMismatch("born_probabilities: state dim " +
                            std::to_string(rho.rows()) + " vs POVM dim " +
                            std::to_string(povm.dim()));
  Eigen::VectorXd probs(static_cast<Eigen::Index>(povm.size()));
  for (std::size_t k = 0; k < povm.size(); ++k) {
    const double p = (povm.elements[k] * rho).trace().real();
    if (p < -kClampTol || p > 1.0 + kClampTol)
      throw Error("born_probabilities: probability " + std::to_string(p) +
                  " outside [0, 1]");
    probs[static_cast<Eigen::Index>(k)] = std::clamp(p, 0.0, 1.0);
  }
  return probs;
}

}  // namespace wtomo
