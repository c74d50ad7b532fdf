#include "foilres/polar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <utility>

#include "foilres/errors.hpp"
#include "parse_util.hpp"

namespace foilres {

PolarTable::PolarTable(std::vector<PolarPoint> points, std::string section_name)
    : points_(std::move(points)), section_name_(std::move(section_name)) {
  if (points_.size() < 3) {
    throw TooFewPoints("polar table needs at least 3 points, got " +
                       std::to_string(points_.size()));
  }
  std::sort(points_.begin(), points_.end(),
            [](const PolarPoint& a, const PolarPoint& b) { return a.alpha_deg < b.alpha_deg; });
  for (size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.alpha_deg) || !std::isfinite(p.cl) || !std::isfinite(p.cd)) {
      throw InvalidInput("polar table contains non-finite values");
    }
    if (std::abs(p.alpha_deg) > 90.0) {
      throw InvalidInput("polar alpha out of [-90, 90]: " + std::to_string(p.alpha_deg));
    }
    if (!(p.cd > 0.0)) {
      throw InvalidInput("polar cd must be positive, got " + std::to_string(p.cd) +
                         " at alpha " + std::to_string(p.alpha_deg));
    }
    if (i > 0 && !(points_[i - 1].alpha_deg < p.alpha_deg)) {
      throw DuplicateAlpha("duplicate alpha in polar table: " + std::to_string(p.alpha_deg));
    }
  }
}

PolarCoefficients PolarTable::interpolate(double alpha_deg) const {
  if (alpha_deg < alpha_min_deg() || alpha_deg > alpha_max_deg()) {
    std::ostringstream msg;
    msg << "alpha " << alpha_deg << " outside polar range [" << alpha_min_deg() << ", "
        << alpha_max_deg() << "]";
    throw OutOfRange(msg.str());
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), alpha_deg,
                             [](double a, const PolarPoint& p) { return a < p.alpha_deg; });
  size_t hi = std::min<size_t>(it - points_.begin(), points_.size() - 1);
  size_t lo = hi - 1;
  const PolarPoint& a = points_[lo];
  const PolarPoint& b = points_[hi];
  // Exact at knots regardless of rounding in the lerp.
  if (alpha_deg == a.alpha_deg) return {a.cl, a.cd};
  if (alpha_deg == b.alpha_deg) return {b.cl, b.cd};
  double t = (alpha_deg - a.alpha_deg) / (b.alpha_deg - a.alpha_deg);
  return {a.cl + t * (b.cl - a.cl), a.cd + t * (b.cd - a.cd)};
}

double PolarTable::efficiency(double alpha_deg) const {
  PolarCoefficients c = interpolate(alpha_deg);
  return c.cl / c.cd;
}

double PolarTable::min_cd_alpha(double lo_deg, double hi_deg) const {
  if (lo_deg > hi_deg) std::swap(lo_deg, hi_deg);
  double best_alpha = lo_deg;
  double best_cd = interpolate(lo_deg).cd;
  for (const PolarPoint& p : points_) {
    if (p.alpha_deg <= lo_deg || p.alpha_deg >= hi_deg) continue;
    if (p.cd < best_cd) {
      best_cd = p.cd;
      best_alpha = p.alpha_deg;
    }
  }
  double cd_hi = interpolate(hi_deg).cd;
  if (cd_hi < best_cd) {
    best_cd = cd_hi;
    best_alpha = hi_deg;
  }
  return best_alpha;
}

PolarTable parse_polar(std::istream& in, std::string section_name) {
  std::vector<PolarPoint> points;
  std::string line;
  int lineno = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    auto tokens = detail::split_ws(body);
    if (header_allowed && !detail::parse_double(tokens[0])) {
      // Column header from a section-solver dump; skip it once.
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (tokens.size() < 3) {
      throw MalformedRow("polar line " + std::to_string(lineno) + ": expected `alpha cl cd`, got " +
                         std::to_string(tokens.size()) + " columns");
    }
    PolarPoint p;
    double* fields[3] = {&p.alpha_deg, &p.cl, &p.cd};
    for (int k = 0; k < 3; ++k) {
      auto v = detail::parse_double(tokens[k]);
      if (!v) {
        throw MalformedRow("polar line " + std::to_string(lineno) + ": non-numeric field `" +
                           std::string(tokens[k]) + "`");
      }
      *fields[k] = *v;
    }
    points.push_back(p);
  }
  return PolarTable(std::move(points), std::move(section_name));
}

std::string serialize_polar(const PolarTable& table) {
  std::string out = "alpha cl cd\n";
  char buf[96];
  for (const PolarPoint& p : table.points()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.alpha_deg, p.cl, p.cd);
    out += buf;
  }
  return out;
}

}  // namespace foilres
