#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foilres {

/// One row of a section polar: angle of attack in degrees, lift and drag
/// coefficients of the infinite-span (2D) section.
struct PolarPoint {
  double alpha_deg = 0.0;
  double cl = 0.0;
  double cd = 0.0;
};

struct PolarCoefficients {
  double cl = 0.0;
  double cd = 0.0;
};

/// Immutable, alpha-sorted table of 2D section coefficients. Safe for
/// concurrent reads.
///
/// Queries outside the tabulated alpha range are hard errors: beyond the
/// tabulated angles the flow is separation-dominated and linear
/// extrapolation of the coefficients would be fiction.
class PolarTable {
 public:
  /// Sorts the points on alpha and validates: at least 3 points, no
  /// duplicate alpha, |alpha| <= 90, cd > 0, all values finite.
  PolarTable(std::vector<PolarPoint> points, std::string section_name);

  const std::vector<PolarPoint>& points() const { return points_; }
  const std::string& section_name() const { return section_name_; }

  double alpha_min_deg() const { return points_.front().alpha_deg; }
  double alpha_max_deg() const { return points_.back().alpha_deg; }

  /// Piecewise-linear interpolation of cl and cd independently.
  /// Exact at knots. Throws OutOfRange outside [alpha_min, alpha_max].
  PolarCoefficients interpolate(double alpha_deg) const;

  /// Lift-to-drag ratio cl/cd at alpha.
  double efficiency(double alpha_deg) const;

  /// Angle of minimum cd within [lo_deg, hi_deg]. cd is piecewise linear,
  /// so the minimum sits on a knot or an interval bound; ties resolve to
  /// the smallest angle. Used as the drag-optimal tie-break when a foil
  /// angle is otherwise indeterminate.
  double min_cd_alpha(double lo_deg, double hi_deg) const;

 private:
  std::vector<PolarPoint> points_;
  std::string section_name_;
};

/// Parses the plain-text polar format: lines starting with '#' are
/// comments, the first data line may be a column header (skipped when its
/// first token is not numeric), every other line is `alpha cl cd` with
/// columns beyond the third ignored. Rows may come in any order.
PolarTable parse_polar(std::istream& in, std::string section_name = "");

/// Writes the table back in the same format with full double precision,
/// so parse(serialize(t)) reproduces t exactly.
std::string serialize_polar(const PolarTable& table);

}  // namespace foilres
