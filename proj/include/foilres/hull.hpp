#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace foilres {

/// One bare-hull CFD sample at fixed horizontal attitude.
/// rx: longitudinal resistance, positive aft. fz: hydrodynamic vertical
/// force beyond hydrostatics, positive up. my: pitch moment about the
/// center of gravity, positive bow-up.
struct HullSample {
  double speed_ms = 0.0;
  double displacement_kg = 0.0;
  double rx_n = 0.0;
  double fz_n = 0.0;
  double my_nm = 0.0;
};

struct FitDomain {
  double speed_min_ms = 0.0;
  double speed_max_ms = 0.0;
  double displacement_min_kg = 0.0;
  double displacement_max_kg = 0.0;
};

/// Full bivariate quadratic over (speed V, displacement D):
///
///   f(V, D) = a0 + a1 V + a2 D + a3 V^2 + a4 V D + a5 D^2
struct HullSurface {
  std::array<double, 6> coefficients{};
  FitDomain fit_domain{};
  double rms_residual = 0.0;

  double value(double speed_ms, double displacement_kg) const;
};

struct HullForces {
  double rx_n = 0.0;
  double fz_n = 0.0;
  double my_nm = 0.0;
  // True when the displacement fell below the fitted range and the
  // polynomial was extrapolated.
  bool extrapolated = false;
};

/// The three response surfaces plus the waterline length used for Froude
/// number reporting. Immutable after construction; concurrent evaluation
/// is safe.
class HullSurfaceSet {
 public:
  /// Validates that the three surfaces share one fit domain, that the
  /// domain is non-degenerate and that lwl > 0.
  HullSurfaceSet(HullSurface rx, HullSurface fz, HullSurface my, double lwl_m);

  const HullSurface& rx_surface() const { return rx_; }
  const HullSurface& fz_surface() const { return fz_; }
  const HullSurface& my_surface() const { return my_; }
  const FitDomain& domain() const { return rx_.fit_domain; }
  double lwl_m() const { return lwl_m_; }

  /// Polynomial evaluation of the three surfaces.
  ///
  /// Speed outside the fitted range and displacement above it are hard
  /// errors (OutOfDomain). Displacement zero means the hull is airborne
  /// and returns exact zeros. Displacement between zero and the fitted
  /// minimum extrapolates the polynomials and raises the `extrapolated`
  /// flag; the solver legitimately visits that region when the foils
  /// carry most of the weight.
  HullForces evaluate(double speed_ms, double displacement_kg) const;

  /// V / sqrt(g * lwl) with standard gravity.
  double froude_number(double speed_ms) const;

 private:
  HullSurface rx_, fz_, my_;
  double lwl_m_;
};

/// Three independent least-squares fits on the shared quadratic basis.
/// Needs at least 6 samples (TooFewSamples) spanning a non-degenerate
/// (V, D) grid (RankDeficient otherwise). The fit domain is the bounding
/// box of the samples; per-surface rms residuals are recorded.
HullSurfaceSet fit_hull_surfaces(const std::vector<HullSample>& samples, double lwl_m);

/// Parses rows `speed_kn displacement_kg rx_n fz_n my_nm` (speeds in
/// knots in the file, converted to m/s on ingest); '#' comments and an
/// optional header line allowed.
std::vector<HullSample> parse_hull_samples(std::istream& in);

/// Serialized surface set: three lines of 6 coefficients (rx, fz, my,
/// SI basis: m/s and kg) plus one domain line
/// `v_min v_max d_min d_max lwl`. rms residuals travel as comments only.
HullSurfaceSet parse_hull_surfaces(std::istream& in);
std::string serialize_hull_surfaces(const HullSurfaceSet& surfaces);

}  // namespace foilres
