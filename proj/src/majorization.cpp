#include "logineq/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace logineq {

MajorizationVerdict majorize(const PositiveVector& x, const PositiveVector& y,
                             const TolerancePolicy& tol) {
  const std::size_t n = x.size();
  if (n != y.size()) throw LengthMismatch();

  std::vector<double> xd = sort_desc(x.entries());
  std::vector<double> yd = sort_desc(y.entries());
  std::vector<double> xa(xd.rbegin(), xd.rend());
  std::vector<double> ya(yd.rbegin(), yd.rend());

  MajorizationVerdict v;
  v.weak_below = true;
  v.weak_above = true;
  v.log_weak_below = true;
  v.log_weak_above = true;

  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += xd[k];
    sy += yd[k];
    v.sum_trace_desc.steps.emplace_back(k + 1, sx, sy);
    if (!tol.leq(sx, sy)) v.weak_below = false;
  }
  double total_x = sx, total_y = sy;
  v.strong = v.weak_below && tol.eq(total_x, total_y);

  sx = sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += xa[k];
    sy += ya[k];
    v.sum_trace_asc.steps.emplace_back(k + 1, sx, sy);
    if (!tol.geq(sx, sy)) v.weak_above = false;
  }

  double px = 1.0, py = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    px *= xd[k];
    py *= yd[k];
    v.prod_trace_desc.steps.emplace_back(k + 1, px, py);
    if (!tol.leq(px, py)) v.log_weak_below = false;
  }
  v.log_strong = v.log_weak_below && tol.eq(px, py);

  px = py = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    px *= xa[k];
    py *= ya[k];
    v.prod_trace_asc.steps.emplace_back(k + 1, px, py);
    if (!tol.geq(px, py)) v.log_weak_above = false;
  }
  return v;
}

bool hlp_convex_test(const PositiveVector& x, const PositiveVector& y,
                     Relation relation, const TolerancePolicy& tol) {
  const std::size_t n = x.size();
  if (n != y.size()) throw LengthMismatch();
  const std::vector<double>& xs = x.entries();
  const std::vector<double>& ys = y.entries();

  double sum_x = 0.0, sum_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_x += xs[i];
    sum_y += ys[i];
  }

  // Hinge breakpoints at the entries of y are sufficient: the deviation
  // t -> sum max(x_i - t, 0) - sum max(y_i - t, 0) is piecewise linear and
  // its local maxima sit at kinks of the y-side. The constant tail as
  // t -> -inf (resp. +inf for reversed hinges) is the total-sum comparison,
  // checked separately.
  auto hinges_hold = [&](bool reversed) {
    for (double t : ys) {
      double fx = 0.0, fy = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        fx += reversed ? std::max(t - xs[i], 0.0) : std::max(xs[i] - t, 0.0);
        fy += reversed ? std::max(t - ys[i], 0.0) : std::max(ys[i] - t, 0.0);
      }
      if (!tol.leq(fx, fy)) return false;
    }
    return true;
  };

  switch (relation) {
    case Relation::strong:
      // Convex f includes +-identity, forcing equal totals.
      return tol.eq(sum_x, sum_y) && hinges_hold(false);
    case Relation::weak_below:
      // Convex increasing; the identity gives sum x <= sum y.
      return tol.leq(sum_x, sum_y) && hinges_hold(false);
    case Relation::weak_above:
      // Convex decreasing (reversed hinges); -identity gives sum x >= sum y.
      return tol.geq(sum_x, sum_y) && hinges_hold(true);
  }
  return false;
}

bool log_implications_check(const PositiveVector& x, const PositiveVector& y,
                            const TolerancePolicy& tol) {
  MajorizationVerdict v = majorize(x, y, tol);
  if (v.log_weak_below && !v.weak_below) return false;
  if (v.weak_above && !v.log_weak_above) return false;
  return true;
}

}  // namespace logineq
