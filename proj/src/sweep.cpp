#include "wtomo/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "wtomo/metrics.hpp"
#include "wtomo/states.hpp"

namespace wtomo {

std::vector<double> eta_range(double start, double end, double step) {
  if (!(step > 0.0))
    throw ParameterOutOfRange("eta_range: step must be positive");
  if (!(start >= 0.0 && start <= 1.0 && end >= 0.0 && end <= 1.0))
    throw ParameterOutOfRange("eta_range: grid must stay within [0, 1]");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double eta = start + k * step;
    if (eta > end + 0.5 * step) break;
    grid.push_back(std::min(eta, 1.0));
  }
  return grid;
}

std::vector<SweepSummary> summarize_sweep(
    const std::vector<SweepRecord>& records) {
  std::vector<SweepSummary> summaries;
  for (const SweepRecord& record : records) {
    const bool new_cell = summaries.empty() ||
                          summaries.back().eta != record.eta ||
                          summaries.back().mean_pairs != record.mean_pairs;
    if (new_cell) {
      SweepSummary summary;
      summary.eta = record.eta;
      summary.mean_pairs = record.mean_pairs;
      summary.fidelity_min = record.fidelity;
      summary.fidelity_max = record.fidelity;
      summary.purity_true = record.purity_true;
      summary.concurrence_true = record.concurrence_true;
      summaries.push_back(summary);
    }
    SweepSummary& cell = summaries.back();
    ++cell.trials;
    cell.fidelity_mean += record.fidelity;
    cell.fidelity_min = std::min(cell.fidelity_min, record.fidelity);
    cell.fidelity_max = std::max(cell.fidelity_max, record.fidelity);
    cell.purity_estimated_mean += record.purity_estimated;
    cell.concurrence_estimated_mean += record.concurrence_estimated;
  }
  for (SweepSummary& cell : summaries) {
    cell.fidelity_mean /= cell.trials;
    cell.purity_estimated_mean /= cell.trials;
    cell.concurrence_estimated_mean /= cell.trials;
  }
  return summaries;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  if (config.etas.empty())
    throw ParameterOutOfRange("run_sweep: empty eta grid");
  if (config.mean_pairs.empty())
    throw ParameterOutOfRange("run_sweep: empty mean_pairs list");
  if (config.trials < 1)
    throw ParameterOutOfRange("run_sweep: trials must be >= 1");
  for (double eta : config.etas)
    if (!(eta >= 0.0 && eta <= 1.0))
      throw ParameterOutOfRange("run_sweep: eta = " + std::to_string(eta));
  for (double pairs : config.mean_pairs)
    if (!(pairs > 0.0) || !std::isfinite(pairs))
      throw InvalidMean("run_sweep: mean_pairs = " + std::to_string(pairs));

  struct Cell {
    std::size_t eta_index;
    std::size_t pairs_index;
    int trial;
  };
  std::vector<Cell> cells;
  for (std::size_t e = 0; e < config.etas.size(); ++e)
    for (std::size_t p = 0; p < config.mean_pairs.size(); ++p)
      for (int trial = 0; trial < config.trials; ++trial)
        cells.push_back({e, p, trial});

  const PovmSet povm = two_qubit_povm();
  const RandomSource master(config.seed);
  std::vector<SweepRecord> records(cells.size());

  const auto run_cell = [&](std::size_t index) {
    const Cell& cell = cells[index];
    const double eta = config.etas[cell.eta_index];
    const double pairs = config.mean_pairs[cell.pairs_index];
    const Matrix4c rho = werner_two_qubit(eta);
    const RandomSource stream =
        master.derive({static_cast<std::uint64_t>(cell.eta_index),
                       static_cast<std::uint64_t>(cell.pairs_index),
                       static_cast<std::uint64_t>(cell.trial)});
    const CountVector counts = simulate_counts(rho, povm, pairs, stream);
    const EstimationResult fit = estimate(counts, povm, config.estimator);
    const FiguresOfMerit figures = figures_of_merit(fit.sigma, rho);

    SweepRecord& record = records[index];
    record.eta = eta;
    record.mean_pairs = pairs;
    record.trial = cell.trial;
    record.fidelity = figures.fidelity;
    record.purity_estimated = figures.purity;
    record.purity_true = purity(rho);
    record.concurrence_estimated = figures.concurrence;
    record.concurrence_true = concurrence_werner_theory(eta);
    record.chi2 = fit.chi2;
    record.evaluations = fit.evaluations;
    record.converged = fit.converged;
  };

  unsigned workers = config.threads > 0
                         ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, cells.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t index = next.fetch_add(1);
          if (index >= cells.size() || failed.load()) return;
          try {
            run_cell(index);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            failed.store(true);
            return;
          }
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return records;
}

CorrelationScan run_correlation(double eta, double mean_pairs,
                                double angle_step_deg, std::uint64_t seed) {
  if (!(angle_step_deg > 0.0 && angle_step_deg <= 360.0))
    throw ParameterOutOfRange("run_correlation: bad angle step " +
                              std::to_string(angle_step_deg));
  std::vector<double> angles;
  for (double deg = 0.0; deg <= 360.0 + 1e-9; deg += angle_step_deg)
    angles.push_back(deg * std::numbers::pi / 180.0);
  return correlation_scan(eta, mean_pairs, angles, RandomSource(seed));
}

}  // namespace wtomo
