#pragma once

#include <cmath>
#include <stdexcept>

namespace foilres {

/// Bracketed bisection. `f(lo)` and `f(hi)` must have opposite signs (or
/// one of them be zero). Refines until the bracket is narrower than
/// `x_tol` AND |f| at the returned point is below `f_tol`, capped at 200
/// halvings — enough to reach machine resolution on any sane bracket, so
/// the cap is never the binding limit for continuous functions.
///
/// Deterministic and derivative-free; the lift and moment curves it is
/// used on are piecewise linear, so bracketing cannot be fooled.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double f_lo, double f_hi, double x_tol,
                   double f_tol) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw std::logic_error("bisect_root: bracket does not straddle a sign change");
  }
  double best_x = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  double best_f = std::abs(f_lo) <= std::abs(f_hi) ? f_lo : f_hi;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at fp resolution
    double f_mid = f(mid);
    if (std::abs(f_mid) <= std::abs(best_f)) {
      best_f = f_mid;
      best_x = mid;
    }
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    if (hi - lo < x_tol && std::abs(best_f) <= f_tol) break;
  }
  return best_x;
}

}  // namespace foilres
