#include "wtomo/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace wtomo {

NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  const Eigen::Index n = start.size();
  const double dim = static_cast<double>(n);

  // Adaptive coefficients (reflection, expansion, contraction, shrink);
  // the standard 1/2/0.5/0.5 set degrades for larger dimensions.
  const double alpha = 1.0;
  const double chi = 1.0 + 2.0 / dim;
  const double gamma = 0.75 - 1.0 / (2.0 * dim);
  const double delta = 1.0 - 1.0 / dim;

  int evaluations = 0;
  const auto eval = [&](const Eigen::VectorXd& x) {
    ++evaluations;
    return objective(x);
  };

  // Initial simplex: start plus one perturbed vertex per coordinate.
  std::vector<Eigen::VectorXd> vertices(static_cast<std::size_t>(n) + 1, start);
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    double& coord = vertices[static_cast<std::size_t>(i) + 1][i];
    coord = (coord != 0.0) ? coord * 1.05 : 0.00025;
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) values[v] = eval(vertices[v]);

  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  const auto sort_vertices = [&]() {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b];
    });
  };

  Eigen::VectorXd centroid(n), reflected(n), expanded(n), contracted(n);
  bool converged = false;

  for (;;) {
    sort_vertices();
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double diameter = 0.0;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      diameter = std::max(
          diameter, (vertices[v] - vertices[best]).cwiseAbs().maxCoeff());
    if (diameter < options.simplex_tol ||
        values[worst] - values[best] < options.fvalue_tol) {
      converged = true;
      break;
    }
    if (evaluations >= options.max_evaluations) break;

    centroid.setZero();
    for (std::size_t v = 0; v < order.size() - 1; ++v)
      centroid += vertices[order[v]];
    centroid /= dim;

    reflected = centroid + alpha * (centroid - vertices[worst]);
    const double f_reflected = eval(reflected);

    if (f_reflected < values[best]) {
      if (evaluations < options.max_evaluations) {
        expanded = centroid + chi * (reflected - centroid);
        const double f_expanded = eval(expanded);
        if (f_expanded < f_reflected) {
          vertices[worst] = expanded;
          values[worst] = f_expanded;
          continue;
        }
      }
      vertices[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    if (f_reflected < values[second_worst]) {
      vertices[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    if (evaluations >= options.max_evaluations) break;
    const bool outside = f_reflected < values[worst];
    if (outside)
      contracted = centroid + gamma * (reflected - centroid);
    else
      contracted = centroid - gamma * (centroid - vertices[worst]);
    const double f_contracted = eval(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      vertices[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }

    // Shrink everything toward the best vertex.
    for (std::size_t v = 1; v < order.size(); ++v) {
      if (evaluations >= options.max_evaluations) break;
      const std::size_t idx = order[v];
      vertices[idx] = vertices[best] + delta * (vertices[idx] - vertices[best]);
      values[idx] = eval(vertices[idx]);
    }
    if (evaluations >= options.max_evaluations) break;
  }

  sort_vertices();
  NelderMeadResult result;
  result.x = vertices[order.front()];
  result.fmin = values[order.front()];
  result.evaluations = evaluations;
  result.converged = converged;
  return result;
}

}  // namespace wtomo
