#include "foilres/hull.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "foilres/errors.hpp"
#include "foilres/units.hpp"
#include "parse_util.hpp"

namespace foilres {

double HullSurface::value(double speed_ms, double displacement_kg) const {
  const auto& a = coefficients;
  double v = speed_ms;
  double d = displacement_kg;
  return a[0] + a[1] * v + a[2] * d + a[3] * v * v + a[4] * v * d + a[5] * d * d;
}

HullSurfaceSet::HullSurfaceSet(HullSurface rx, HullSurface fz, HullSurface my, double lwl_m)
    : rx_(rx), fz_(fz), my_(my), lwl_m_(lwl_m) {
  if (!(lwl_m_ > 0.0)) throw InvalidInput("waterline length must be positive");
  auto same = [](const FitDomain& a, const FitDomain& b) {
    return a.speed_min_ms == b.speed_min_ms && a.speed_max_ms == b.speed_max_ms &&
           a.displacement_min_kg == b.displacement_min_kg &&
           a.displacement_max_kg == b.displacement_max_kg;
  };
  if (!same(rx_.fit_domain, fz_.fit_domain) || !same(rx_.fit_domain, my_.fit_domain)) {
    throw InvalidInput("hull surfaces must share one fit domain");
  }
  const FitDomain& dom = rx_.fit_domain;
  if (!(dom.speed_min_ms < dom.speed_max_ms) ||
      !(dom.displacement_min_kg < dom.displacement_max_kg)) {
    throw InvalidInput("hull surface fit domain is degenerate");
  }
}

HullForces HullSurfaceSet::evaluate(double speed_ms, double displacement_kg) const {
  const FitDomain& dom = domain();
  if (!(speed_ms >= dom.speed_min_ms && speed_ms <= dom.speed_max_ms)) {
    std::ostringstream msg;
    msg << "speed " << speed_ms << " m/s outside fitted range [" << dom.speed_min_ms << ", "
        << dom.speed_max_ms << "]";
    throw OutOfDomain(msg.str());
  }
  if (!(displacement_kg >= 0.0 && displacement_kg <= dom.displacement_max_kg)) {
    std::ostringstream msg;
    msg << "displacement " << displacement_kg << " kg outside [0, " << dom.displacement_max_kg
        << "]";
    throw OutOfDomain(msg.str());
  }
  if (displacement_kg == 0.0) return {0.0, 0.0, 0.0, false};  // hull airborne
  HullForces f;
  f.rx_n = rx_.value(speed_ms, displacement_kg);
  f.fz_n = fz_.value(speed_ms, displacement_kg);
  f.my_nm = my_.value(speed_ms, displacement_kg);
  f.extrapolated = displacement_kg < dom.displacement_min_kg;
  return f;
}

double HullSurfaceSet::froude_number(double speed_ms) const {
  return speed_ms / std::sqrt(kStandardGravity * lwl_m_);
}

HullSurfaceSet fit_hull_surfaces(const std::vector<HullSample>& samples, double lwl_m) {
  if (samples.size() < 6) {
    throw TooFewSamples("quadratic surface fit needs at least 6 samples, got " +
                        std::to_string(samples.size()));
  }
  FitDomain dom{samples[0].speed_ms, samples[0].speed_ms, samples[0].displacement_kg,
                samples[0].displacement_kg};
  for (const HullSample& s : samples) {
    if (!std::isfinite(s.speed_ms) || !std::isfinite(s.displacement_kg) ||
        !std::isfinite(s.rx_n) || !std::isfinite(s.fz_n) || !std::isfinite(s.my_nm)) {
      throw InvalidInput("hull sample contains non-finite values");
    }
    if (s.speed_ms < 0.0 || s.displacement_kg < 0.0) {
      throw InvalidInput("hull sample speed and displacement must be non-negative");
    }
    dom.speed_min_ms = std::min(dom.speed_min_ms, s.speed_ms);
    dom.speed_max_ms = std::max(dom.speed_max_ms, s.speed_ms);
    dom.displacement_min_kg = std::min(dom.displacement_min_kg, s.displacement_kg);
    dom.displacement_max_kg = std::max(dom.displacement_max_kg, s.displacement_kg);
  }

  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd a(n, 6);
  Eigen::MatrixXd b(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const HullSample& s = samples[i];
    double v = s.speed_ms;
    double d = s.displacement_kg;
    a(i, 0) = 1.0;
    a(i, 1) = v;
    a(i, 2) = d;
    a(i, 3) = v * v;
    a(i, 4) = v * d;
    a(i, 5) = d * d;
    b(i, 0) = s.rx_n;
    b(i, 1) = s.fz_n;
    b(i, 2) = s.my_nm;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < 6) {
    throw RankDeficient(
        "hull sample grid is degenerate; the quadratic basis needs spread in both speed "
        "and displacement");
  }
  Eigen::MatrixXd x = qr.solve(b);
  Eigen::MatrixXd residual = a * x - b;

  auto make_surface = [&](int col) {
    HullSurface s;
    for (int k = 0; k < 6; ++k) s.coefficients[k] = x(k, col);
    s.fit_domain = dom;
    s.rms_residual = std::sqrt(residual.col(col).squaredNorm() / static_cast<double>(n));
    return s;
  };
  return HullSurfaceSet(make_surface(0), make_surface(1), make_surface(2), lwl_m);
}

std::vector<HullSample> parse_hull_samples(std::istream& in) {
  std::vector<HullSample> samples;
  std::string line;
  int lineno = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    auto tokens = detail::split_ws(body);
    if (header_allowed && !detail::parse_double(tokens[0])) {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (tokens.size() != 5) {
      throw MalformedRow("hull sample line " + std::to_string(lineno) +
                         ": expected `speed_kn displacement_kg rx_n fz_n my_nm`");
    }
    double values[5];
    for (int k = 0; k < 5; ++k) {
      auto v = detail::parse_double(tokens[k]);
      if (!v) {
        throw MalformedRow("hull sample line " + std::to_string(lineno) + ": non-numeric field `" +
                           std::string(tokens[k]) + "`");
      }
      values[k] = *v;
    }
    samples.push_back({knots_to_ms(values[0]), values[1], values[2], values[3], values[4]});
  }
  return samples;
}

namespace {

std::array<double, 6> read_coefficient_line(std::istream& in, int& lineno, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    auto tokens = detail::split_ws(body);
    if (tokens.size() != 6) {
      throw MalformedRow(std::string("surface file line ") + std::to_string(lineno) + ": " + what +
                         " needs 6 coefficients");
    }
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k) {
      auto v = detail::parse_double(tokens[k]);
      if (!v) {
        throw MalformedRow("surface file line " + std::to_string(lineno) + ": non-numeric field");
      }
      out[k] = *v;
    }
    return out;
  }
  throw MalformedRow(std::string("surface file ended before the ") + what + " line");
}

}  // namespace

HullSurfaceSet parse_hull_surfaces(std::istream& in) {
  int lineno = 0;
  auto rx = read_coefficient_line(in, lineno, "rx surface");
  auto fz = read_coefficient_line(in, lineno, "fz surface");
  auto my = read_coefficient_line(in, lineno, "my surface");

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    auto tokens = detail::split_ws(body);
    if (tokens.size() != 5) {
      throw MalformedRow("surface file line " + std::to_string(lineno) +
                         ": domain line needs `v_min v_max d_min d_max lwl`");
    }
    double values[5];
    for (int k = 0; k < 5; ++k) {
      auto v = detail::parse_double(tokens[k]);
      if (!v) {
        throw MalformedRow("surface file line " + std::to_string(lineno) + ": non-numeric field");
      }
      values[k] = *v;
    }
    FitDomain dom{values[0], values[1], values[2], values[3]};
    HullSurface srx{rx, dom, 0.0};
    HullSurface sfz{fz, dom, 0.0};
    HullSurface smy{my, dom, 0.0};
    return HullSurfaceSet(srx, sfz, smy, values[4]);
  }
  throw MalformedRow("surface file ended before the domain line");
}

std::string serialize_hull_surfaces(const HullSurfaceSet& surfaces) {
  std::string out;
  out += "# hull response surfaces, basis f(V_ms, D_kg) = a0 + a1 V + a2 D + a3 V^2 + a4 V D + a5 D^2\n";
  out += "# rows: rx_n, fz_n, my_nm; then domain `v_min v_max d_min d_max lwl` (m/s, kg, m)\n";
  char buf[300];
  std::snprintf(buf, sizeof buf, "# fit rms: rx %.6g N, fz %.6g N, my %.6g N*m\n",
                surfaces.rx_surface().rms_residual, surfaces.fz_surface().rms_residual,
                surfaces.my_surface().rms_residual);
  out += buf;
  for (const HullSurface* s :
       {&surfaces.rx_surface(), &surfaces.fz_surface(), &surfaces.my_surface()}) {
    const auto& a = s->coefficients;
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g %.17g\n", a[0], a[1], a[2], a[3],
                  a[4], a[5]);
    out += buf;
  }
  const FitDomain& dom = surfaces.domain();
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g\n", dom.speed_min_ms,
                dom.speed_max_ms, dom.displacement_min_kg, dom.displacement_max_kg,
                surfaces.lwl_m());
  out += buf;
  return out;
}

}  // namespace foilres
