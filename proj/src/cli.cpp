#include "wtomo/cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "wtomo/io.hpp"
#include "wtomo/metrics.hpp"
#include "wtomo/states.hpp"
#include "wtomo/sweep.hpp"

namespace wtomo {

namespace {

std::string eta_suffix_path(const std::string& path, double eta) {
  char tag[32];
  std::snprintf(tag, sizeof(tag), "_eta%g", eta);
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + tag;
  return path.substr(0, dot) + tag + path.substr(dot);
}

int run_parsed(const std::string& command, const SweepConfig& sweep_config,
               double eta_start, double eta_end, double eta_step,
               const std::string& summary_path,
               const std::vector<double>& correlate_etas, double pairs,
               double angle_step, double simulate_eta, bool round_counts,
               const std::string& input_path, const std::string& out_path,
               std::optional<double> reference_eta, std::uint64_t seed) {
  if (command == "sweep") {
    SweepConfig config = sweep_config;
    config.etas = eta_range(eta_start, eta_end, eta_step);
    const std::vector<SweepRecord> records = run_sweep(config);
    write_sweep_csv(out_path, records);
    if (!summary_path.empty())
      write_sweep_summary_csv(summary_path, summarize_sweep(records));
    return 0;
  }

  if (command == "correlate") {
    const bool multiple = correlate_etas.size() > 1;
    for (std::size_t k = 0; k < correlate_etas.size(); ++k) {
      const double eta = correlate_etas[k];
      // Independent scans: each eta gets its own derived stream.
      const std::uint64_t scan_seed =
          multiple ? mix_seed(seed, k) : seed;
      const CorrelationScan scan =
          run_correlation(eta, pairs, angle_step, scan_seed);
      const std::string path =
          multiple ? eta_suffix_path(out_path, eta) : out_path;
      write_correlation_csv(path, scan);
    }
    return 0;
  }

  if (command == "simulate") {
    const Matrix4c rho = werner_two_qubit(simulate_eta);
    const CountVector counts = simulate_counts(
        rho, two_qubit_povm(), pairs, RandomSource(seed),
        round_counts ? CountRounding::nearest_even : CountRounding::none);
    CountsFile file;
    file.counts = counts;
    file.seed = seed;
    file.eta = simulate_eta;
    write_counts_csv(out_path, file);
    return 0;
  }

  // reconstruct
  const CountsFile file = read_counts_csv(input_path);
  const PovmSet povm = two_qubit_povm();
  const EstimationResult result =
      estimate(file.counts, povm, sweep_config.estimator);
  std::optional<ReferenceComparison> reference;
  if (reference_eta) {
    const Matrix4c rho = werner_two_qubit(*reference_eta);
    const FiguresOfMerit figures = figures_of_merit(result.sigma, rho);
    reference = ReferenceComparison{*reference_eta,
                                    figures.fidelity,
                                    figures.purity,
                                    purity(rho),
                                    figures.concurrence,
                                    concurrence_werner_theory(*reference_eta)};
  }
  write_state_json(out_path, result, reference);
  if (!result.converged) {
    std::cerr << "reconstruct: estimator did not converge within budget\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Two-qubit Werner state tomography with a SIC-POVM scheme"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  std::string out_path;
  SweepConfig sweep_config;

  double eta_start = 0.0, eta_end = 1.0, eta_step = 0.02;
  std::string summary_path;
  bool paper_mode = false;
  std::vector<double> correlate_etas{0.5, 1.0};
  double pairs = 1000.0;
  double angle_step = 5.0;
  double simulate_eta = 0.0;
  bool round_counts = false;
  std::string input_path;
  double reference_eta_value = 0.0;

  const auto add_estimator_flags = [&](CLI::App* cmd) {
    cmd->add_option("--restarts", sweep_config.estimator.restarts,
                    "Optimizer restarts")->check(CLI::PositiveNumber);
    cmd->add_option("--max-evals", sweep_config.estimator.max_evaluations,
                    "Objective evaluations per restart")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--floor", sweep_config.estimator.count_floor,
                    "Denominator floor for the chi^2 terms, in counts")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Full eta sweep: simulate, reconstruct, score");
  sweep_cmd->add_option("--eta-start", eta_start, "Grid start");
  sweep_cmd->add_option("--eta-end", eta_end, "Grid end");
  sweep_cmd->add_option("--eta-step", eta_step, "Grid step");
  sweep_cmd->add_option("--pairs", sweep_config.mean_pairs,
                        "Mean photon pairs per measurement (list)")
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep_config.trials, "Trials per cell")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--paper-mode", paper_mode,
                      "Single trial per cell (irregular single-run curves)");
  sweep_cmd->add_option("--threads", sweep_config.threads,
                        "Worker threads, 0 = all cores");
  sweep_cmd->add_option("--seed", seed, "Master seed");
  sweep_cmd->add_option("--out", out_path, "Output CSV")
      ->default_val("sweep.csv");
  sweep_cmd->add_option("--summary", summary_path,
                        "Also write per-cell mean/min/max CSV here");
  add_estimator_flags(sweep_cmd);

  CLI::App* correlate_cmd = app.add_subcommand(
      "correlate", "Polarization correlation scan (fixed H arm)");
  correlate_cmd->add_option("--eta", correlate_etas,
                            "Werner parameter(s), one scan per value")
      ->delimiter(',');
  correlate_cmd->add_option("--pairs", pairs, "Mean photon pairs")
      ->check(CLI::PositiveNumber);
  correlate_cmd->add_option("--angle-step", angle_step,
                            "Analyzer step in degrees");
  correlate_cmd->add_option("--seed", seed, "Master seed");
  correlate_cmd->add_option("--out", out_path, "Output CSV")
      ->default_val("correlation.csv");

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Write one noisy 16-outcome counts file");
  simulate_cmd->add_option("--eta", simulate_eta, "Werner parameter")
      ->required();
  simulate_cmd->add_option("--pairs", pairs, "Mean photon pairs")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "Master seed");
  simulate_cmd->add_flag("--round", round_counts,
                         "Round counts half-to-even to integers");
  simulate_cmd->add_option("--out", out_path, "Output CSV")
      ->default_val("counts.csv");

  CLI::App* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Estimate a state from a counts file");
  reconstruct_cmd->add_option("--in", input_path, "Counts CSV")->required();
  reconstruct_cmd->add_option("--out", out_path, "Output JSON")
      ->default_val("state.json");
  CLI::Option* ref_opt = reconstruct_cmd->add_option(
      "--reference-eta", reference_eta_value,
      "Also report metrics against this Werner state");
  add_estimator_flags(reconstruct_cmd);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string program = "wtomo";
  argv.push_back(program.data());
  for (std::string& arg : storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (paper_mode) sweep_config.trials = 1;
  sweep_config.seed = seed;

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    std::optional<double> reference_eta;
    if (*ref_opt) reference_eta = reference_eta_value;
    return run_parsed(command, sweep_config, eta_start, eta_end, eta_step,
                      summary_path, correlate_etas, pairs, angle_step,
                      simulate_eta, round_counts, input_path, out_path,
                      reference_eta, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wtomo
