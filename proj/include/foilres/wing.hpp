#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "foilres/polar.hpp"

namespace foilres {

/// Finite-span correction curve in inverse powers of the aspect ratio:
///
///   value(AR) = 1 + c1/AR + c2/AR^2 + ... + c6/AR^6
///
/// The intercept is fixed at 1 by construction, so the curve tends to the
/// 2D section value as AR -> infinity. Coefficients beyond the fitted
/// degree are zero.
struct RatioCurve {
  std::array<double, 6> coefficients{};  // c1..c6
};

/// Drag-coefficient correction fitted on a NACA 4412 aspect-ratio sweep
/// (AR 2..48 at Re 2e7). Applies multiplicatively to the 2D cd.
RatioCurve builtin_drag_ratio();

/// Lift-coefficient correction from the same sweep.
RatioCurve builtin_lift_ratio();

/// Evaluates the curve at a finite aspect ratio. Throws NonPositiveAr for
/// ar <= 0.
double evaluate_ratio(const RatioCurve& curve, double aspect_ratio);

/// Geometry and data of one foil assembly. `span_m` is the span of a
/// single element; symmetric pairs use element_count = 2. A span of zero
/// is the documented stand-in for "no foil": all forces vanish and the
/// aspect-ratio machinery is bypassed.
struct FoilGeometry {
  double chord_m = 0.0;
  double span_m = 0.0;
  int element_count = 1;
  double x_position_m = 0.0;  // longitudinal, relative to CG, positive forward
  double alpha_min_deg = 0.0;
  double alpha_max_deg = 0.0;
  std::shared_ptr<const PolarTable> section;
  RatioCurve lift_ratio = builtin_lift_ratio();
  RatioCurve drag_ratio = builtin_drag_ratio();

  double aspect_ratio() const { return span_m / chord_m; }
  double planform_area_m2() const { return chord_m * span_m * element_count; }
  void validate() const;
};

struct ForceCoefficients {
  double cl = 0.0;
  double cd = 0.0;
};

/// 2D section coefficients corrected to finite span and mounting
/// interference:
///
///   cl = cl2D(alpha) * lift_ratio(AR) * sqrt(eff)
///   cd = cd2D(alpha) * drag_ratio(AR) / sqrt(eff)
///
/// The square-root split makes the lift-to-drag ratio drop by exactly the
/// factor `interference_efficiency` (default 0.9, i.e. a 10% efficiency
/// loss) without biasing either coefficient more than the other.
ForceCoefficients corrected_coefficients(const FoilGeometry& geom, double alpha_deg,
                                         double interference_efficiency);

struct FoilForces {
  double lift_n = 0.0;
  double drag_n = 0.0;
};

/// Dimensional forces of the whole assembly (all elements):
/// 0.5 * rho * V^2 * chord * span * element_count * coefficient.
/// Lift acts vertically, drag longitudinally.
FoilForces foil_forces(const FoilGeometry& geom, double alpha_deg, double speed_ms,
                       double water_density_kgm3, double interference_efficiency);

struct RichardsonResult {
  double asymptote = 0.0;
  double observed_order = 0.0;
};

/// Generalized Richardson extrapolation of a three-point refinement
/// sequence (here: wing loads at geometrically increasing aspect ratio).
///
///   order p   = log(|f_c - f_m| / |f_m - f_f|) / log(r)
///   asymptote = f_f + (f_f - f_m) / (r^p - 1)
///
/// Requires a strictly monotone sequence (throws NonMonotoneSequence) and
/// distinct successive differences (throws ZeroDifference, which also
/// covers equal differences where the observed order would be zero and
/// the asymptote undefined).
RichardsonResult richardson_extrapolate(double f_coarse, double f_medium, double f_fine,
                                        double refinement_ratio);

/// One point of an aspect-ratio sweep: force per unit wing area.
struct ArSample {
  double ar = 0.0;
  double value = 0.0;  // N/m^2
};

/// Least-squares fit of (value/asymptote - 1) on the basis {1/ar, ...,
/// 1/ar^degree}, the intercept pinned at 1. Coefficients above `degree`
/// are zero. Throws ZeroAsymptote, RankDeficient (fewer than degree+1
/// samples or too few distinct ar values).
RatioCurve fit_ratio_curve(std::span<const ArSample> samples, double asymptote, int degree);

/// Parses rows of `ar value`; '#' comments allowed.
std::vector<ArSample> parse_ar_samples(std::istream& in);

/// One line: `1 c1 c2 c3 c4 c5 c6` (leading intercept must be 1).
RatioCurve parse_ratio_curve(std::istream& in);
std::string serialize_ratio_curve(const RatioCurve& curve);

}  // namespace foilres
