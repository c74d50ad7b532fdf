#include "foilres/equilibrium.hpp"

#include <cmath>
#include <sstream>

#include "foilres/errors.hpp"
#include "foilres/root_find.hpp"

namespace foilres {

void YachtConfig::validate() const {
  if (!(total_displacement_kg > 0.0)) throw InvalidInput("total displacement must be positive");
  if (!(target_displacement_kg >= 0.0 && target_displacement_kg <= total_displacement_kg)) {
    throw InvalidInput("target displacement must lie in [0, total displacement]");
  }
  if (!(water_density_kgm3 > 0.0)) throw InvalidInput("water density must be positive");
  if (!(gravity_ms2 > 0.0)) throw InvalidInput("gravity must be positive");
  if (!(interference_efficiency > 0.0 && interference_efficiency <= 1.0)) {
    throw InvalidInput("interference efficiency must be in (0, 1]");
  }
  main_foil.validate();
  rudder_foil.validate();
  if (main_foil.x_position_m != 0.0) {
    throw InvalidInput("main foil must sit at the longitudinal center of gravity (x = 0)");
  }
  if (rudder_foil.x_position_m == 0.0) {
    throw InvalidInput("rudder foil needs a nonzero lever arm");
  }
  if (total_displacement_kg > surfaces.domain().displacement_max_kg) {
    std::ostringstream msg;
    msg << "total displacement " << total_displacement_kg
        << " kg exceeds the hull surface domain (max "
        << surfaces.domain().displacement_max_kg << " kg)";
    throw OutOfDomain(msg.str());
  }
}

namespace {

constexpr double kFlatEps = 1e-12;

bool nearly_flat(double f_lo, double f_hi) {
  return std::abs(f_lo - f_hi) <=
         kFlatEps * std::max({1.0, std::abs(f_lo), std::abs(f_hi)});
}

struct FoilLift {
  const YachtConfig* cfg;
  const FoilGeometry* geom;
  double speed_ms;

  double operator()(double alpha_deg) const {
    return foil_forces(*geom, alpha_deg, speed_ms, cfg->water_density_kgm3,
                       cfg->interference_efficiency)
        .lift_n;
  }
};

struct RudderSolution {
  double alpha_deg;
  bool saturated;
};

// Zero of lift(alpha) * x_rudder + my over the allowed pitch range.
RudderSolution solve_rudder(const YachtConfig& cfg, double speed_ms, double hull_my_nm,
                            const SolverTolerances& tol) {
  const FoilGeometry& foil = cfg.rudder_foil;
  FoilLift lift{&cfg, &foil, speed_ms};
  auto moment_gap = [&](double alpha) { return lift(alpha) * foil.x_position_m + hull_my_nm; };
  double lo = foil.alpha_min_deg;
  double hi = foil.alpha_max_deg;
  double g_lo = moment_gap(lo);
  double g_hi = moment_gap(hi);
  if (nearly_flat(g_lo, g_hi)) {
    // No lift authority. With nothing to cancel the angle is
    // indeterminate and the drag minimum wins; otherwise it is a clamp.
    if (std::abs(g_lo) <= tol.moment_nm) return {foil.section->min_cd_alpha(lo, hi), false};
    return {std::abs(g_lo) <= std::abs(g_hi) ? lo : hi, true};
  }
  if ((g_lo <= 0.0 && g_hi >= 0.0) || (g_lo >= 0.0 && g_hi <= 0.0)) {
    double alpha = bisect_root(moment_gap, lo, hi, g_lo, g_hi, tol.angle_deg, 0.5 * tol.moment_nm);
    return {alpha, false};
  }
  return {std::abs(g_lo) <= std::abs(g_hi) ? lo : hi, true};
}

enum class MainOutcome { kInRange, kIndeterminate, kClampedLow, kClampedHigh };

struct MainSolution {
  double alpha_deg;
  MainOutcome outcome;
};

// Pitch angle delivering the required vertical force, or the nearest
// pitch limit when the requirement is out of reach.
MainSolution solve_main(const YachtConfig& cfg, double speed_ms, double required_lift_n,
                        const SolverTolerances& tol) {
  const FoilGeometry& foil = cfg.main_foil;
  FoilLift lift{&cfg, &foil, speed_ms};
  auto lift_gap = [&](double alpha) { return lift(alpha) - required_lift_n; };
  double lo = foil.alpha_min_deg;
  double hi = foil.alpha_max_deg;
  double m_lo = lift_gap(lo);
  double m_hi = lift_gap(hi);
  if (nearly_flat(m_lo, m_hi)) {
    if (std::abs(m_lo) <= tol.vertical_n) {
      return {foil.section->min_cd_alpha(lo, hi), MainOutcome::kIndeterminate};
    }
    if (m_lo < 0.0) return {hi, MainOutcome::kClampedHigh};
    return {lo, MainOutcome::kClampedLow};
  }
  if ((m_lo <= 0.0 && m_hi >= 0.0) || (m_lo >= 0.0 && m_hi <= 0.0)) {
    double alpha = bisect_root(lift_gap, lo, hi, m_lo, m_hi, tol.angle_deg, 0.5 * tol.vertical_n);
    return {alpha, MainOutcome::kInRange};
  }
  if (m_lo < 0.0) {
    // Lift short of the requirement over the whole range.
    return {m_hi >= m_lo ? hi : lo, MainOutcome::kClampedHigh};
  }
  return {m_lo <= m_hi ? lo : hi, MainOutcome::kClampedLow};
}

}  // namespace

EquilibriumState solve_equilibrium(const YachtConfig& cfg, double speed_ms,
                                   const SolverTolerances& tol) {
  cfg.validate();
  const double total = cfg.total_displacement_kg;
  const double gravity = cfg.gravity_ms2;
  FoilLift main_lift{&cfg, &cfg.main_foil, speed_ms};
  FoilLift rudder_lift{&cfg, &cfg.rudder_foil, speed_ms};

  double displacement = cfg.target_displacement_kg;
  double pass_displacement = displacement;
  HullForces hull = cfg.surfaces.evaluate(speed_ms, displacement);  // validates the speed early

  RudderSolution rudder{0.0, false};
  MainSolution main{0.0, MainOutcome::kInRange};
  double lift_r = 0.0;
  bool converged = false;
  bool clamped_high_at_exit = false;

  for (int iter = 0; iter < tol.max_outer_iterations; ++iter) {
    pass_displacement = displacement;
    hull = cfg.surfaces.evaluate(speed_ms, displacement);

    rudder = solve_rudder(cfg, speed_ms, hull.my_nm, tol);
    lift_r = rudder_lift(rudder.alpha_deg);

    double required = gravity * (total - displacement) - hull.fz_n - lift_r;
    main = solve_main(cfg, speed_ms, required, tol);

    double next_displacement = displacement;
    clamped_high_at_exit = false;
    if (main.outcome == MainOutcome::kClampedHigh) {
      clamped_high_at_exit = true;
      // The pinned foil cannot make up the deficit at this waterline:
      // hand the remainder back to buoyancy.
      double lift_m_max = main_lift(main.alpha_deg);
      auto balance = [&](double d) {
        return gravity * (total - d) - cfg.surfaces.evaluate(speed_ms, d).fz_n - lift_r -
               lift_m_max;
      };
      double h_lo = balance(displacement);
      double h_hi = balance(total);
      if (h_lo > 0.0 && h_hi > 0.0) {
        std::ostringstream msg;
        msg << "vertical balance unreachable at " << speed_ms << " m/s: even the full "
            << total << " kg displacement leaves a lift deficit of " << h_hi << " N";
        throw NoVerticalBalance(msg.str());
      }
      if (h_lo <= 0.0) {
        next_displacement = displacement;  // already balanced here
      } else {
        next_displacement = bisect_root(balance, displacement, total, h_lo, h_hi,
                                        0.1 * tol.displacement_kg, 0.5 * tol.vertical_n);
      }
    }

    if (std::abs(next_displacement - displacement) < tol.displacement_kg) {
      converged = true;
      break;  // keep the pass-consistent state at `displacement`
    }
    displacement = next_displacement;
  }
  displacement = pass_displacement;  // hull/angles above were solved here

  FoilForces main_f = foil_forces(cfg.main_foil, main.alpha_deg, speed_ms, cfg.water_density_kgm3,
                                  cfg.interference_efficiency);
  FoilForces rudder_f = foil_forces(cfg.rudder_foil, rudder.alpha_deg, speed_ms,
                                    cfg.water_density_kgm3, cfg.interference_efficiency);

  EquilibriumState state;
  state.speed_ms = speed_ms;
  state.alpha_main_deg = main.alpha_deg;
  state.alpha_rudder_deg = rudder.alpha_deg;
  state.residual_displacement_kg = displacement;
  state.hull_rx_n = hull.rx_n;
  state.main_drag_n = main_f.drag_n;
  state.rudder_drag_n = rudder_f.drag_n;
  state.total_resistance_n = state.hull_rx_n + state.main_drag_n + state.rudder_drag_n;
  state.vertical_residual_n =
      gravity * (total - displacement) - hull.fz_n - lift_r - main_f.lift_n;
  state.moment_residual_nm = lift_r * cfg.rudder_foil.x_position_m + hull.my_nm;

  bool main_saturated = clamped_high_at_exit || main.outcome == MainOutcome::kClampedLow ||
                        displacement > cfg.target_displacement_kg + tol.displacement_kg;
  if (main_saturated) state.flags |= flag_bit(StateFlag::kMainFoilSaturated);
  if (rudder.saturated) state.flags |= flag_bit(StateFlag::kRudderSaturated);
  if (hull.extrapolated) state.flags |= flag_bit(StateFlag::kExtrapolated);
  if (!converged) state.flags |= flag_bit(StateFlag::kNotConverged);
  return state;
}

double bare_hull_resistance(const YachtConfig& cfg, double speed_ms) {
  return cfg.surfaces.evaluate(speed_ms, cfg.total_displacement_kg).rx_n;
}

}  // namespace foilres
