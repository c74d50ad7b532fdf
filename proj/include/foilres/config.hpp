#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "foilres/sweep.hpp"

namespace foilres {

/// Everything one run needs, resolved from a flat `key = value` config
/// file ('#' comments, dotted keys). Referenced data files are loaded
/// relative to the config file's directory.
///
/// Required keys:
///   total_displacement_kg, target_displacement_kg
///   hull_samples_file + lwl_m   (fit on load)   -- or, alternatively --
///   hull_surfaces_file          (pre-fitted coefficients)
///   main_foil.polar_file  .chord_m .span_m .element_count
///   main_foil.alpha_min_deg .alpha_max_deg
///   rudder_foil.*  (same set)  plus rudder_foil.x_position_m
///   speed.min_kn  speed.max_kn  speed.step_kn
/// Optional:
///   label (default: config file stem)
///   water_density_kgm3 (1025), gravity_ms2 (9.80665),
///   interference_efficiency (0.9), main_foil.x_position_m (0)
///   <foil>.lift_ratio_file / <foil>.drag_ratio_file (default: built-ins)
///   tolerance.angle_deg .displacement_kg .vertical_n .moment_nm
///   tolerance.max_outer_iterations
/// Unknown keys are errors.
struct RunConfig {
  std::string label;
  YachtConfig yacht;
  std::vector<double> speeds_ms;
  SolverTolerances tolerances;
};

RunConfig load_run_config(const std::filesystem::path& config_file);

/// Builds the speed grid `min, min+step, ...` up to max (inclusive within
/// half a step of rounding), converted from knots to m/s.
std::vector<double> make_speed_grid_ms(double min_kn, double max_kn, double step_kn);

}  // namespace foilres
