#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace phasebound::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCertificationFailure = 2;

enum class Subcommand { verify, corollary1, lemma1, experiment };
enum class OutputFormat { json, csv };

struct RunConfig {
  Subcommand subcommand = Subcommand::verify;
  std::filesystem::path f_path;
  std::filesystem::path g_path;
  std::optional<double> p;
  std::optional<double> zero_tol;
  std::optional<double> support_tol;
  long long radius_steps = 0;
  long long angle_steps = 0;
  std::string experiment_name;
  std::vector<double> sweep;
  std::optional<std::size_t> grid_points;
  std::optional<double> grid_half_extent;
  int k = 2;
  int n = 1;
  std::optional<std::filesystem::path> out_path;
  OutputFormat format = OutputFormat::json;
};

/// Runs a parsed configuration. Reports go to --out (written atomically) or
/// to `out`; diagnostics go to `err`.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_corollary1(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lemma1(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_experiment(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasebound::cli
