#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsm/diagnostics.hpp"
#include "rsm/domain_optimizer.hpp"
#include "rsm/lhat_curve.hpp"
#include "rsm/potentials.hpp"

namespace rsm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class Precision { Double, Extended };

/// Thrown for invalid command-line combinations; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string potential = "sho";
  double alpha = 1.0;
  int n_basis = 22;
  std::optional<double> length;
  std::optional<double> length_y;
  bool auto_length = false;
  std::string curve_file;
  bool no_auto_curve = false;
  int states = 10;
  std::optional<int> grid_out;
  bool precision_report = false;
  double degeneracy_tol = kDegeneracyTolerance;
  Precision precision = Precision::Double;
  LengthBracket bracket{};
  bool timing = false;
  std::string out;
};

struct OptimizeConfig {
  std::string potential = "sho";
  double alpha = 1.0;
  std::vector<int> n_values{6, 10, 14, 18, 22};
  LengthBracket bracket{};
  Precision precision = Precision::Double;
};

struct ConvergenceConfig {
  std::string potential = "sho";
  double alpha = 1.0;
  std::vector<int> n_range;
  std::string curve_file;
  Eigen::Index state = 0;
  LengthBracket bracket{};
  Precision precision = Precision::Double;
};

struct ConvergenceRow {
  int n_basis = 0;
  double length = 0.0;
  double energy = 0.0;
  double error = 0.0;
};

struct ConvergenceTable {
  /// "delta_E" against an exact reference, "delta_hat_E" otherwise.
  std::string error_kind;
  std::vector<ConvergenceRow> rows;
};

struct GridConfig {
  RunConfig run;
  Eigen::Index state = 0;
  int grid = kDefaultPsiGrid;
};

struct WavefunctionGrid {
  double length_x = 0.0;
  double length_y = 0.0;
  /// values(i, j) = psi(x_i, y_j)
  Eigen::MatrixXd values;
};

/// Results document for one solve. Deterministic for identical configs
/// unless `timing` is set.
nlohmann::ordered_json cmd_solve(const RunConfig& config);
LhatCurve cmd_optimize(const OptimizeConfig& config);
ConvergenceTable cmd_convergence(const ConvergenceConfig& config);
WavefunctionGrid cmd_grid(const GridConfig& config);

void write_grid(std::ostream& out, const WavefunctionGrid& grid);
void write_convergence(std::ostream& out, const ConvergenceTable& table);

/// "8:20:2" (inclusive, default step 1) or "8,10,12".
std::vector<int> parse_int_list(const std::string& text);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsm::cli
