#pragma once

#include "foilres/hull.hpp"
#include "foilres/units.hpp"
#include "foilres/wing.hpp"

namespace foilres {

struct SolverTolerances {
  double angle_deg = 1e-3;        // bisection bracket width on pitch angles
  double displacement_kg = 0.01;  // outer-loop convergence on residual displacement
  double vertical_n = 0.5;        // acceptable vertical force residual
  double moment_nm = 0.5;         // acceptable pitch moment residual
  int max_outer_iterations = 50;
};

enum class StateFlag : unsigned {
  kMainFoilSaturated = 1u << 0,  // main foil pinned at a pitch limit
  kRudderSaturated = 1u << 1,    // rudder foil cannot cancel the hull moment
  kExtrapolated = 1u << 2,       // hull surfaces evaluated below the fitted displacement range
  kNotConverged = 1u << 3,       // outer loop hit the iteration cap
};

constexpr unsigned flag_bit(StateFlag f) { return static_cast<unsigned>(f); }

/// Solved operating point of the yacht at one speed.
struct EquilibriumState {
  double speed_ms = 0.0;
  double alpha_main_deg = 0.0;
  double alpha_rudder_deg = 0.0;
  double residual_displacement_kg = 0.0;  // weight still carried by buoyancy
  double hull_rx_n = 0.0;
  double main_drag_n = 0.0;
  double rudder_drag_n = 0.0;
  double total_resistance_n = 0.0;  // always hull_rx + main_drag + rudder_drag
  double vertical_residual_n = 0.0;
  double moment_residual_nm = 0.0;
  unsigned flags = 0;

  bool has(StateFlag f) const { return (flags & flag_bit(f)) != 0; }
};

/// Full description of one yacht + foil configuration.
struct YachtConfig {
  double total_displacement_kg = 0.0;
  double target_displacement_kg = 0.0;  // what we want left in the water
  FoilGeometry main_foil;               // at the CG: pure lift, no moment arm
  FoilGeometry rudder_foil;             // aft of the CG: cancels the hull moment
  double water_density_kgm3 = kSeaWaterDensity;
  double gravity_ms2 = kStandardGravity;
  double interference_efficiency = 0.9;
  HullSurfaceSet surfaces;

  void validate() const;
};

/// Finds the foil pitch angles and residual displacement balancing the
/// yacht at one speed.
///
/// Per outer pass, at the working displacement D:
///   1. hull forces (rx, fz, my) from the response surfaces;
///   2. rudder pitch zeroing lift_rudder * x_rudder + my (bracketed
///      bisection; clamped to the nearer bound with kRudderSaturated when
///      the moment is out of reach);
///   3. main pitch delivering F_req = g (total - D) - fz - lift_rudder;
///   4. if F_req exceeds the lift at the maximum pitch, the main foil is
///      pinned there (kMainFoilSaturated) and D is re-solved from the
///      vertical balance within [D, total] — throwing NoVerticalBalance
///      when even D = total leaves a deficit; if F_req falls below the
///      lift at the minimum pitch, the foil is pinned low and D is left
///      alone (the model never drives the hull above the requested
///      waterline, so the residual is reported instead).
/// The loop repeats until D settles within tolerance; with no saturation
/// it terminates after one pass. Foil lift counts as purely vertical and
/// foil drag as purely longitudinal: pitch angles in the working range
/// are small enough that force rotation is far below the model accuracy.
///
/// An angle with no effect on its balance (zero-area or zero-lift foil
/// with nothing to cancel) is indeterminate and tie-broken to the drag
/// minimum of the allowed range.
EquilibriumState solve_equilibrium(const YachtConfig& config, double speed_ms,
                                   const SolverTolerances& tolerances = {});

/// Resistance of the bare hull carrying the full displacement — the
/// no-foil baseline the sweeps compare against.
double bare_hull_resistance(const YachtConfig& config, double speed_ms);

}  // namespace foilres
