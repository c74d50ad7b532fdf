#include "foilres/sweep.hpp"

#include <cmath>
#include <limits>

#include "foilres/errors.hpp"

namespace foilres {

namespace {

void validate_request(const SweepRequest& req) {
  req.config.validate();
  if (req.speeds_ms.empty()) throw InvalidInput("sweep needs at least one speed");
  const FitDomain& dom = req.config.surfaces.domain();
  double prev = -1.0;
  for (double v : req.speeds_ms) {
    if (!(v > prev)) throw InvalidInput("sweep speeds must be strictly increasing");
    if (v < dom.speed_min_ms || v > dom.speed_max_ms) {
      throw OutOfDomain("sweep speed " + std::to_string(v) + " m/s outside the hull domain");
    }
    prev = v;
  }
}

SweepRecord solve_record(const SweepRequest& req, double speed_ms) {
  SweepRecord rec;
  rec.speed_ms = speed_ms;
  rec.bare_rx_n = bare_hull_resistance(req.config, speed_ms);
  try {
    rec.state = solve_equilibrium(req.config, speed_ms, req.tolerances);
    rec.delta_percent = 100.0 * (rec.state->total_resistance_n - rec.bare_rx_n) / rec.bare_rx_n;
  } catch (const NoVerticalBalance&) {
    rec.failure = "NoVerticalBalance";
    rec.delta_percent = std::numeric_limits<double>::quiet_NaN();
  } catch (const Error& e) {
    rec.failure = std::string("Error: ") + e.what();
    rec.delta_percent = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

SweepResult run_sweep_impl(const SweepRequest& req, bool parallel) {
  validate_request(req);
  SweepResult result;
  result.label = req.label;
  result.records.resize(req.speeds_ms.size());
  const auto n = static_cast<std::int64_t>(req.speeds_ms.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      result.records[i] = solve_record(req, req.speeds_ms[i]);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      result.records[i] = solve_record(req, req.speeds_ms[i]);
    }
  }
  result.crossover_speeds_ms = crossover_speeds(result);
  return result;
}

}  // namespace

SweepResult run_sweep(const SweepRequest& request) { return run_sweep_impl(request, true); }

SweepResult run_sweep_serial(const SweepRequest& request) {
  return run_sweep_impl(request, false);
}

std::vector<double> crossover_speeds(const SweepResult& result) {
  struct Valid {
    double speed;
    double delta;
  };
  std::vector<Valid> valid;
  for (const SweepRecord& r : result.records) {
    if (!r.state || r.state->has(StateFlag::kNotConverged)) continue;
    valid.push_back({r.speed_ms, r.delta_percent});
  }
  std::vector<double> crossings;
  int last_sign = 0;
  size_t last_idx = 0;
  for (size_t k = 0; k < valid.size(); ++k) {
    double d = valid[k].delta;
    int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      if (k == last_idx + 1) {
        double d0 = valid[last_idx].delta;
        double t = d0 / (d0 - d);
        crossings.push_back(valid[last_idx].speed + t * (valid[k].speed - valid[last_idx].speed));
      } else {
        // The curve sat exactly on zero in between; the first touching
        // grid speed is the crossover.
        crossings.push_back(valid[last_idx + 1].speed);
      }
    }
    last_sign = s;
    last_idx = k;
  }
  return crossings;
}

ComparisonTable compare(const std::vector<SweepResult>& results) {
  if (results.empty()) throw InvalidInput("nothing to compare");
  ComparisonTable table;
  for (const SweepRecord& r : results.front().records) table.speeds_ms.push_back(r.speed_ms);
  for (const SweepResult& res : results) {
    if (res.records.size() != table.speeds_ms.size()) {
      throw MismatchedSpeedGrids("sweep `" + res.label + "` has a different number of speeds");
    }
    for (size_t i = 0; i < res.records.size(); ++i) {
      if (res.records[i].speed_ms != table.speeds_ms[i]) {
        throw MismatchedSpeedGrids("sweep `" + res.label + "` runs on a different speed grid");
      }
    }
    table.labels.push_back(res.label);
    std::vector<double> column;
    column.reserve(res.records.size());
    for (const SweepRecord& r : res.records) {
      column.push_back(r.state ? r.state->total_resistance_n
                               : std::numeric_limits<double>::quiet_NaN());
    }
    table.resistance_n.push_back(std::move(column));
  }
  for (size_t i = 0; i < table.speeds_ms.size(); ++i) {
    size_t best = table.labels.size();
    for (size_t j = 0; j < table.labels.size(); ++j) {
      double v = table.resistance_n[j][i];
      if (std::isnan(v)) continue;
      if (best == table.labels.size() || v < table.resistance_n[best][i]) best = j;
    }
    table.best_label.push_back(best == table.labels.size() ? std::string() : table.labels[best]);
  }
  return table;
}

}  // namespace foilres
