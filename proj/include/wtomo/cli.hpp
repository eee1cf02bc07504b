#ifndef WTOMO_CLI_HPP
#define WTOMO_CLI_HPP

#include <string>
#include <vector>

namespace wtomo {

/// Runs the command-line driver on `args` (without the program name).
/// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 estimator
/// non-convergence (reconstruct only).
int run_cli(const std::vector<std::string>& args);

}  // namespace wtomo

#endif  // WTOMO_CLI_HPP
