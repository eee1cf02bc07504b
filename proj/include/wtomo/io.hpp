#ifndef WTOMO_IO_HPP
#define WTOMO_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wtomo/reconstruct.hpp"
#include "wtomo/simulate.hpp"
#include "wtomo/sweep.hpp"

namespace wtomo {

/// Counts file: header `alpha,i,j,count`, 16 data rows ordered by alpha,
/// then `# key=value` metadata comments (mean_pairs required).
struct CountsFile {
  CountVector counts;
  std::optional<std::uint64_t> seed;
  std::optional<double> eta;
};

void write_counts_csv(std::ostream& out, const CountsFile& file);
void write_counts_csv(const std::string& path, const CountsFile& file);

/// Throws ParseError (with a 1-based line number) on malformed content and
/// IoError when the file cannot be opened.
CountsFile read_counts_csv(std::istream& in);
CountsFile read_counts_csv(const std::string& path);

/// Header `angle_deg,expected,noisy`.
void write_correlation_csv(std::ostream& out, const CorrelationScan& scan);
void write_correlation_csv(const std::string& path, const CorrelationScan& scan);

/// Header `eta,mean_pairs,trial,fidelity,purity_est,purity_true,
/// concurrence_est,concurrence_true,chi2,evaluations,converged`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRecord>& records);

/// Header `eta,mean_pairs,trials,fidelity_mean,fidelity_min,fidelity_max,
/// purity_est_mean,purity_true,concurrence_est_mean,concurrence_true`.
void write_sweep_summary_csv(std::ostream& out,
                             const std::vector<SweepSummary>& summaries);
void write_sweep_summary_csv(const std::string& path,
                             const std::vector<SweepSummary>& summaries);

/// Figures of merit of an estimate against a reference Werner state.
struct ReferenceComparison {
  double eta = 0.0;
  double fidelity = 0.0;
  double purity_estimated = 0.0;
  double purity_true = 0.0;
  double concurrence_estimated = 0.0;
  double concurrence_true = 0.0;
};

/// Estimated-state JSON: `matrix` as 4x4 nested arrays of [re, im] pairs,
/// plus `chi2`, `evaluations`, `converged`, and an optional `reference`
/// block with the comparison metrics.
std::string state_json(const EstimationResult& result,
                       const std::optional<ReferenceComparison>& reference = {});
void write_state_json(const std::string& path, const EstimationResult& result,
                      const std::optional<ReferenceComparison>& reference = {});

/// Opens for writing, throws IoError on failure.
std::ofstream open_output(const std::string& path);

}  // namespace wtomo

#endif  // WTOMO_IO_HPP
