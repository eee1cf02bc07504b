#ifndef WTOMO_SWEEP_HPP
#define WTOMO_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "wtomo/reconstruct.hpp"
#include "wtomo/simulate.hpp"

namespace wtomo {

constexpr std::uint64_t kDefaultSeed = 12345;

struct SweepConfig {
  std::vector<double> etas;                         // values in [0, 1]
  std::vector<double> mean_pairs{10.0, 100.0, 1000.0};
  int trials = 10;
  std::uint64_t seed = kDefaultSeed;
  EstimatorConfig estimator;
  int threads = 0;  // 0 = hardware concurrency
};

/// One simulate -> estimate -> compare cycle.
struct SweepRecord {
  double eta = 0.0;
  double mean_pairs = 0.0;
  int trial = 0;
  double fidelity = 0.0;
  double purity_estimated = 0.0;
  double purity_true = 0.0;
  double concurrence_estimated = 0.0;
  double concurrence_true = 0.0;
  double chi2 = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Per-(eta, mean_pairs) aggregate of the trial records.
struct SweepSummary {
  double eta = 0.0;
  double mean_pairs = 0.0;
  int trials = 0;
  double fidelity_mean = 0.0;
  double fidelity_min = 0.0;
  double fidelity_max = 0.0;
  double purity_estimated_mean = 0.0;
  double purity_true = 0.0;
  double concurrence_estimated_mean = 0.0;
  double concurrence_true = 0.0;
};

/// Inclusive grid start, start+step, ..., end; every value must stay in
/// [0, 1]. Throws ParameterOutOfRange otherwise.
std::vector<double> eta_range(double start, double end, double step);

/// Collapses trial records (ordered as run_sweep returns them) into one
/// summary row per (eta, mean_pairs) cell.
std::vector<SweepSummary> summarize_sweep(
    const std::vector<SweepRecord>& records);

/// Runs every (eta, mean_pairs, trial) cell: noisy counts from the Werner
/// state, chi^2 estimation, figures of merit against the true state.
/// Cells execute concurrently on private substreams of the master seed;
/// the returned order is (eta, mean_pairs, trial) regardless of scheduling.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Full-turn polarization scan at `angle_step_deg` degree spacing.
CorrelationScan run_correlation(double eta, double mean_pairs,
                                double angle_step_deg, std::uint64_t seed);

}  // namespace wtomo

#endif  // WTOMO_SWEEP_HPP
