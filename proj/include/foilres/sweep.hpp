#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foilres/equilibrium.hpp"

namespace foilres {

struct SweepRequest {
  YachtConfig config;
  std::vector<double> speeds_ms;  // strictly increasing, inside the hull domain
  std::string label;
  SolverTolerances tolerances;
};

struct SweepRecord {
  double speed_ms = 0.0;
  double bare_rx_n = 0.0;
  // Missing when the solve raised (e.g. NoVerticalBalance); the sweep
  // records the failure and keeps going.
  std::optional<EquilibriumState> state;
  double delta_percent = 0.0;  // 100 * (total - bare) / bare, NaN when failed
  std::string failure;         // short reason, empty on success
};

struct SweepResult {
  std::string label;
  std::vector<SweepRecord> records;
  std::vector<double> crossover_speeds_ms;
};

/// One equilibrium solve plus one bare-hull evaluation per speed.
/// Independent speeds run in parallel (OpenMP when enabled); records are
/// assembled in speed order and are bit-identical to the serial path.
SweepResult run_sweep(const SweepRequest& request);

/// Reference implementation: same contract, plain serial loop.
SweepResult run_sweep_serial(const SweepRequest& request);

/// Speeds where the resistance advantage changes sign, linearly
/// interpolated between adjacent valid records. Records that failed or
/// did not converge are excluded. A run of exact zeros between opposite
/// signs reports the first touching speed; zeros without a surrounding
/// sign change (grazing, or an identically zero sweep) report nothing.
std::vector<double> crossover_speeds(const SweepResult& result);

struct ComparisonTable {
  std::vector<double> speeds_ms;
  std::vector<std::string> labels;
  // resistance_n[label_index][speed_index]; NaN for failed solves.
  std::vector<std::vector<double>> resistance_n;
  std::vector<std::string> best_label;  // per speed; ties resolve to the first label
};

/// Per-speed tabulation of total resistance across configurations.
/// All results must share one speed grid (MismatchedSpeedGrids).
ComparisonTable compare(const std::vector<SweepResult>& results);

}  // namespace foilres
