#include "wtomo/reconstruct.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wtomo/linalg.hpp"
#include "wtomo/optimize.hpp"
#include "wtomo/random.hpp"
#include "wtomo/states.hpp"

namespace wtomo {

namespace {

constexpr double kDegenerateTrace = 1e-30;
// Fixed stream for restart perturbations; estimate() stays a pure function
// of (observed, povm, config).
constexpr std::uint64_t kRestartSeed = 0x9d2c5680u;

Matrix4c build_factor(const double* t) {
  Matrix4c factor = Matrix4c::Zero();
  factor(0, 0) = t[0];
  factor(1, 1) = t[1];
  factor(2, 2) = t[2];
  factor(3, 3) = t[3];
  factor(1, 0) = Complex(t[4], t[5]);
  factor(2, 1) = Complex(t[6], t[7]);
  factor(3, 2) = Complex(t[8], t[9]);
  factor(2, 0) = Complex(t[10], t[11]);
  factor(3, 1) = Complex(t[12], t[13]);
  factor(3, 0) = Complex(t[14], t[15]);
  return factor;
}

struct Chi2Objective {
  std::array<Matrix4c, 16> povm_transposed;
  Eigen::Matrix<double, 16, 1> observed;
  double mean_pairs = 0.0;
  double floor = 1.0;

  // +inf marks a degenerate (all-zero) parameter point for the optimizer.
  double operator()(const double* t) const {
    const Matrix4c factor = build_factor(t);
    const Matrix4c gram = factor.adjoint() * factor;
    const double norm = gram.trace().real();
    if (!(norm > kDegenerateTrace) || !std::isfinite(norm))
      return std::numeric_limits<double>::infinity();
    double chi2 = 0.0;
    for (int alpha = 0; alpha < 16; ++alpha) {
      // Tr(M S) = sum_ij M_ij S_ji = sum over the transposed element.
      const double expected = mean_pairs *
                              povm_transposed[alpha].cwiseProduct(gram).sum().real() /
                              norm;
      const double diff = observed[alpha] - expected;
      chi2 += diff * diff / std::max(expected, floor);
    }
    return chi2;
  }
};

Chi2Objective make_objective(const CountVector& observed, const PovmSet& povm,
                             double count_floor) {
  if (povm.size() != 16 || povm.dim() != 4)
    throw DimensionMismatch("chi_squared: expected a 16-element 4x4 POVM");
  if (!(observed.mean_pairs > 0.0))
    throw InvalidMean("chi_squared: counts carry mean_pairs = " +
                      std::to_string(observed.mean_pairs));
  Chi2Objective objective;
  for (int alpha = 0; alpha < 16; ++alpha)
    objective.povm_transposed[alpha] =
        Matrix4c(povm.elements[alpha]).transpose();
  objective.observed = observed.counts;
  objective.mean_pairs = observed.mean_pairs;
  objective.floor = count_floor;
  return objective;
}

}  // namespace

Matrix4c params_to_state(const CholeskyParams& params) {
  const Matrix4c factor = build_factor(params.t.data());
  const Matrix4c gram = factor.adjoint() * factor;
  const double norm = gram.trace().real();
  if (!(norm > kDegenerateTrace))
    throw DegenerateParams("params_to_state: Tr(T†T) = " +
                           std::to_string(norm));
  return gram / norm;
}

CholeskyParams state_to_params(const MatrixXc& sigma) {
  if (sigma.rows() != 4 || sigma.cols() != 4)
    throw DimensionMismatch("state_to_params: expected a 4x4 state");
  const HermitianEigen eig = hermitian_eig(sigma);
  const double lambda_min = eig.eigenvalues.minCoeff();
  if (lambda_min < -1e-9)
    throw NotPsd("state_to_params: eigenvalue " + std::to_string(lambda_min));

  Matrix4c work = sigma;
  if (lambda_min < 1e-10) work += 1e-12 * Matrix4c::Identity();

  // sigma = T†T with T lower triangular is the Cholesky factorization of
  // the index-reversed matrix: J sigma J = L L† gives T = (J L J)†.
  const Matrix4c reversed = work.reverse();
  Eigen::LLT<Matrix4c> llt(reversed);
  if (llt.info() != Eigen::Success)
    throw NotPsd("state_to_params: Cholesky factorization failed");
  const Matrix4c lower = llt.matrixL();
  const Matrix4c factor = Matrix4c(lower.reverse()).adjoint();

  CholeskyParams params;
  params.t[0] = factor(0, 0).real();
  params.t[1] = factor(1, 1).real();
  params.t[2] = factor(2, 2).real();
  params.t[3] = factor(3, 3).real();
  const auto put = [&](int slot, int row, int col) {
    params.t[slot] = factor(row, col).real();
    params.t[slot + 1] = factor(row, col).imag();
  };
  put(4, 1, 0);
  put(6, 2, 1);
  put(8, 3, 2);
  put(10, 2, 0);
  put(12, 3, 1);
  put(14, 3, 0);
  return params;
}

double chi_squared(const CholeskyParams& params, const CountVector& observed,
                   const PovmSet& povm, double count_floor) {
  const Chi2Objective objective = make_objective(observed, povm, count_floor);
  const double value = objective(params.t.data());
  if (!std::isfinite(value))
    throw DegenerateParams("chi_squared: Tr(T†T) vanishes");
  return value;
}

std::vector<CholeskyParams> initial_points(const EstimatorConfig& config) {
  const CholeskyParams warm =
      state_to_params(0.25 * Matrix4c::Identity());
  std::vector<CholeskyParams> points;
  points.reserve(static_cast<std::size_t>(std::max(config.restarts, 0)));
  const RandomSource base(kRestartSeed);
  for (int r = 0; r < config.restarts; ++r) {
    CholeskyParams point = warm;
    if (r > 0) {
      RandomSource stream = base.derive({static_cast<std::uint64_t>(r)});
      for (double& coord : point.t)
        coord += config.perturbation * stream.gaussian();
    }
    points.push_back(point);
  }
  return points;
}

EstimationResult estimate(const CountVector& observed, const PovmSet& povm,
                          const EstimatorConfig& config) {
  const Chi2Objective objective =
      make_objective(observed, povm, config.count_floor);
  const auto wrapped = [&objective](const Eigen::VectorXd& x) {
    return objective(x.data());
  };

  NelderMeadOptions options;
  options.max_evaluations = config.max_evaluations;
  options.simplex_tol = config.simplex_tol;
  options.fvalue_tol = config.fvalue_tol;

  EstimationResult best;
  best.chi2 = std::numeric_limits<double>::infinity();
  long total_evaluations = 0;
  int restarts_run = 0;
  for (const CholeskyParams& start : initial_points(config)) {
    Eigen::VectorXd x0(16);
    for (int i = 0; i < 16; ++i) x0[i] = start.t[i];
    const NelderMeadResult run = nelder_mead(wrapped, x0, options);
    total_evaluations += run.evaluations;
    ++restarts_run;
    if (run.fmin < best.chi2) {
      best.chi2 = run.fmin;
      for (int i = 0; i < 16; ++i) best.params.t[i] = run.x[i];
      best.converged = run.converged;
    }
  }
  best.evaluations = total_evaluations;
  best.restarts_used = restarts_run;
  best.sigma = params_to_state(best.params);
  validate_density(best.sigma, 1e-8);
  return best;
}

}  // namespace wtomo
