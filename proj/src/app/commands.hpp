#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "app/config.hpp"

namespace ehf::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceViolation = 1;
inline constexpr int kExitConfigError = 2;

/// A check passes iff its tolerance is positive and the error does not exceed it.
bool within_tolerance(double error, double tolerance);

struct CheckResult {
  std::string name;
  std::size_t particles = 0;  // 0 when the check is not per particle count
  std::size_t samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

/// All verification suites, in a fixed order. Each suite draws from its own seeded stream.
std::vector<CheckResult> run_verify_checks(const RunConfig& cfg);

CommandOutput run_verify(const RunConfig& cfg);
CommandOutput run_solve1d(const RunConfig& cfg);
CommandOutput run_zeeman(const RunConfig& cfg);
CommandOutput run_spin_report(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandOutput run(const RunConfig& cfg);

/// Grid-size threshold below which solve1d marks results as coarse.
inline constexpr std::size_t kCoarseGrid = 50;
/// Largest grid for which solve1d also evaluates the dense pencil determinant.
inline constexpr std::size_t kDenseDeterminantLimit = 40;

}  // namespace ehf::app
