#pragma once

namespace foilres {

// User-facing speeds are in knots, internal computation in m/s.
inline constexpr double kKnotInMs = 0.514444;

inline constexpr double kStandardGravity = 9.80665;  // m/s^2
inline constexpr double kSeaWaterDensity = 1025.0;   // kg/m^3

inline constexpr double knots_to_ms(double kn) { return kn * kKnotInMs; }
inline constexpr double ms_to_knots(double ms) { return ms / kKnotInMs; }

}  // namespace foilres
