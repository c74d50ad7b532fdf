#include "foilres/wing.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>

#include "foilres/errors.hpp"
#include "parse_util.hpp"

namespace foilres {

RatioCurve builtin_drag_ratio() {
  return {{-0.110, 217.261, -2742.862, 16343.289, -51940.417, 83982.370}};
}

RatioCurve builtin_lift_ratio() {
  return {{-0.239, -35.349, 340.353, -1461.250, 2927.150, -2191.410}};
}

double evaluate_ratio(const RatioCurve& curve, double aspect_ratio) {
  if (!(aspect_ratio > 0.0)) {
    throw NonPositiveAr("aspect ratio must be positive, got " + std::to_string(aspect_ratio));
  }
  // Horner in x = 1/AR.
  double x = 1.0 / aspect_ratio;
  double acc = 0.0;
  for (int k = 5; k >= 0; --k) acc = (acc + curve.coefficients[k]) * x;
  return 1.0 + acc;
}

void FoilGeometry::validate() const {
  if (!(chord_m > 0.0)) throw InvalidInput("foil chord must be positive");
  if (!(span_m >= 0.0)) throw InvalidInput("foil span must be non-negative");
  if (element_count < 1) throw InvalidInput("foil element count must be >= 1");
  if (!(alpha_min_deg < alpha_max_deg)) {
    throw InvalidInput("foil pitch range empty: alpha_min must be < alpha_max");
  }
  if (!section) throw InvalidInput("foil has no section polar");
  if (alpha_min_deg < section->alpha_min_deg() || alpha_max_deg > section->alpha_max_deg()) {
    std::ostringstream msg;
    msg << "foil pitch range [" << alpha_min_deg << ", " << alpha_max_deg
        << "] exceeds section polar coverage [" << section->alpha_min_deg() << ", "
        << section->alpha_max_deg() << "]";
    throw InvalidInput(msg.str());
  }
}

ForceCoefficients corrected_coefficients(const FoilGeometry& geom, double alpha_deg,
                                         double interference_efficiency) {
  if (!(interference_efficiency > 0.0 && interference_efficiency <= 1.0)) {
    throw InvalidInput("interference efficiency must be in (0, 1]");
  }
  if (alpha_deg < geom.alpha_min_deg || alpha_deg > geom.alpha_max_deg) {
    std::ostringstream msg;
    msg << "pitch angle " << alpha_deg << " outside allowed range [" << geom.alpha_min_deg << ", "
        << geom.alpha_max_deg << "]";
    throw OutOfRange(msg.str());
  }
  PolarCoefficients c2d = geom.section->interpolate(alpha_deg);
  double ar = geom.aspect_ratio();
  double knockdown = std::sqrt(interference_efficiency);
  return {c2d.cl * evaluate_ratio(geom.lift_ratio, ar) * knockdown,
          c2d.cd * evaluate_ratio(geom.drag_ratio, ar) / knockdown};
}

FoilForces foil_forces(const FoilGeometry& geom, double alpha_deg, double speed_ms,
                       double water_density_kgm3, double interference_efficiency) {
  if (!(speed_ms >= 0.0)) throw InvalidInput("speed must be non-negative");
  if (!(water_density_kgm3 > 0.0)) throw InvalidInput("water density must be positive");
  double area = geom.planform_area_m2();
  if (area == 0.0) return {0.0, 0.0};
  ForceCoefficients c = corrected_coefficients(geom, alpha_deg, interference_efficiency);
  double q = 0.5 * water_density_kgm3 * speed_ms * speed_ms;
  return {q * area * c.cl, q * area * c.cd};
}

RichardsonResult richardson_extrapolate(double f_coarse, double f_medium, double f_fine,
                                        double refinement_ratio) {
  if (!(refinement_ratio > 1.0)) {
    throw InvalidInput("refinement ratio must be > 1, got " + std::to_string(refinement_ratio));
  }
  double d1 = f_medium - f_coarse;
  double d2 = f_fine - f_medium;
  if (d1 == 0.0 || d2 == 0.0) {
    throw ZeroDifference("successive values are identical; no order can be observed");
  }
  if ((d1 > 0.0) != (d2 > 0.0)) {
    throw NonMonotoneSequence("sequence is oscillatory; no convergence order is defined");
  }
  double ratio = std::abs(d1) / std::abs(d2);
  if (ratio == 1.0) {
    throw ZeroDifference("successive differences are equal; observed order is zero");
  }
  double order = std::log(ratio) / std::log(refinement_ratio);
  double asymptote = f_fine + d2 / (std::pow(refinement_ratio, order) - 1.0);
  return {asymptote, order};
}

RatioCurve fit_ratio_curve(std::span<const ArSample> samples, double asymptote, int degree) {
  if (degree < 1 || degree > 6) throw InvalidInput("ratio curve degree must be in [1, 6]");
  if (asymptote == 0.0) throw ZeroAsymptote("asymptotic value must be nonzero");
  if (samples.size() < static_cast<size_t>(degree) + 1) {
    throw RankDeficient("need at least degree+1 samples, got " + std::to_string(samples.size()));
  }
  std::set<double> distinct;
  for (const ArSample& s : samples) {
    if (!(s.ar > 0.0)) throw NonPositiveAr("sample aspect ratio must be positive");
    if (!std::isfinite(s.value)) throw InvalidInput("sample value not finite");
    distinct.insert(s.ar);
  }

  Eigen::MatrixXd a(samples.size(), degree);
  Eigen::VectorXd b(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    double x = 1.0 / samples[i].ar;
    double p = 1.0;
    for (int k = 0; k < degree; ++k) {
      p *= x;
      a(i, k) = p;
    }
    b(i) = samples[i].value / asymptote - 1.0;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < degree || distinct.size() < static_cast<size_t>(degree)) {
    throw RankDeficient("too few distinct aspect ratios for degree " + std::to_string(degree));
  }
  Eigen::VectorXd x = qr.solve(b);
  RatioCurve curve;
  for (int k = 0; k < degree; ++k) curve.coefficients[k] = x(k);
  return curve;
}

std::vector<ArSample> parse_ar_samples(std::istream& in) {
  std::vector<ArSample> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    auto tokens = detail::split_ws(body);
    if (tokens.size() < 2) {
      throw MalformedRow("ar-sample line " + std::to_string(lineno) + ": expected `ar value`");
    }
    auto ar = detail::parse_double(tokens[0]);
    auto value = detail::parse_double(tokens[1]);
    if (!ar || !value) {
      throw MalformedRow("ar-sample line " + std::to_string(lineno) + ": non-numeric field");
    }
    samples.push_back({*ar, *value});
  }
  return samples;
}

RatioCurve parse_ratio_curve(std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    auto tokens = detail::split_ws(body);
    if (tokens.size() != 7) {
      throw MalformedRow("ratio-curve line " + std::to_string(lineno) +
                         ": expected 7 values `1 c1 .. c6`");
    }
    double values[7];
    for (int k = 0; k < 7; ++k) {
      auto v = detail::parse_double(tokens[k]);
      if (!v) {
        throw MalformedRow("ratio-curve line " + std::to_string(lineno) + ": non-numeric field");
      }
      values[k] = *v;
    }
    if (values[0] != 1.0) {
      throw InvalidInput("ratio-curve intercept must be exactly 1");
    }
    RatioCurve curve;
    for (int k = 0; k < 6; ++k) curve.coefficients[k] = values[k + 1];
    return curve;
  }
  throw TooFewPoints("ratio-curve stream holds no data line");
}

std::string serialize_ratio_curve(const RatioCurve& curve) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "1 %.17g %.17g %.17g %.17g %.17g %.17g\n", curve.coefficients[0],
                curve.coefficients[1], curve.coefficients[2], curve.coefficients[3],
                curve.coefficients[4], curve.coefficients[5]);
  return buf;
}

}  // namespace foilres
