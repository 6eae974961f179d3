#pragma once

#include <string>
#include <vector>

#include "haarhankel/haar.hpp"
#include "haarhankel/oracle.hpp"
#include "haarhankel/series.hpp"

namespace haarhankel::cli {

enum class Command { Coeffs, Transform, ErrorStudy, Bench };
enum class FunctionKind { Gaussian, Samples };

enum ExitCode : int {
  kSuccess = 0,
  kArgumentError = 2,
  kInputError = 3,
  kConvergenceError = 4,
};

struct RunConfig {
  Command command = Command::Transform;
  FunctionKind function = FunctionKind::Gaussian;
  double a = 1.0;
  std::string input;         ///< sample file for FunctionKind::Samples
  std::string coeffs_input;  ///< optional coefficient table for `transform`
  TransformOrder order = TransformOrder::Order1;
  double h = 6.0;
  int level = 3;
  std::vector<int> levels;
  double eps = 0.0;
  double p_min = 0.0;
  double p_max = 10.0;
  int p_count = 101;
  bool compare_analytic = false;
  std::string output;  ///< empty or "-" writes to stdout
  QuadratureConfig quad;
  IntegrationOptions integration;

  /// Throws ArgumentError on an invalid combination.
  void validate() const;
  std::vector<double> p_grid() const;
};

/// Each command returns the CSV document it would write.
std::string cmd_coeffs(const RunConfig& cfg);
std::string cmd_transform(const RunConfig& cfg);
std::string cmd_error_study(const RunConfig& cfg);
std::string cmd_bench(const RunConfig& cfg);

/// Parses arguments, runs the command, writes the output and maps failures to
/// ExitCode values (messages go to stderr).
int run(int argc, const char* const* argv);

}  // namespace haarhankel::cli
