#ifndef WTOMO_POVM_HPP
#define WTOMO_POVM_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wtomo/types.hpp"

namespace wtomo {

/// Ordered set of positive measurement operators summing to the identity.
struct PovmSet {
  std::vector<MatrixXc> elements;
  std::vector<std::string> labels;

  Eigen::Index dim() const {
    return elements.empty() ? 0 : elements.front().rows();
  }
  std::size_t size() const { return elements.size(); }
};

/// Flat two-qubit outcome index: alpha = 4*(i-1) + (j-1), i, j in 1..4,
/// i labelling the first (left) arm.
inline int outcome_index(int i, int j) { return 4 * (i - 1) + (j - 1); }
inline std::pair<int, int> outcome_pair(int alpha) {
  return {alpha / 4 + 1, alpha % 4 + 1};
}

/// The four qubit vectors with pairwise overlap |<phi_i|phi_j>|^2 = 1/3.
std::array<Vector2c, 4> sic_vectors();

/// Qubit SIC-POVM: M_i = |phi_i><phi_i| / 2, four elements summing to I2.
PovmSet sic_povm();

/// Product POVM M_i (x) M_j, 16 elements ordered by outcome_index.
PovmSet two_qubit_povm();

/// p(k) = Tr(M_k rho), clamped to [0, 1] after a +-1e-12 guard.
Eigen::VectorXd born_probabilities(const PovmSet& povm, const MatrixXc& rho);

}  // namespace wtomo

#endif  // WTOMO_POVM_HPP
