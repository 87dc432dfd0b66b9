#include "logineq/optimize.hpp"

#include "logineq/rng.hpp"
#include "logineq/sympoly.hpp"

#include <algorithm>
#include <cmath>

namespace logineq {

double feasibility_check(const PositiveVector& a, const PositiveVector& b) {
  const std::size_t n = a.size();
  if (n != b.size()) throw LengthMismatch();
  std::vector<double> ea = elementary_symmetric_all(a.entries());
  std::vector<double> eb = elementary_symmetric_all(b.entries());
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k)
    worst = std::max(worst, (ea[k] - eb[k]) / ea[k]);
  worst = std::max(0.0, worst);
  worst = std::max(worst, std::abs(ea[n - 1] - eb[n - 1]) / ea[n - 1]);
  return worst;
}

namespace {

// b = exp(u) with the last coordinate eliminated: u_n = log e_n - sum u_free.
std::vector<double> lift(const std::vector<double>& u_free, double log_en) {
  std::vector<double> u(u_free);
  double s = 0.0;
  for (double x : u_free) s += x;
  u.push_back(log_en - s);
  return u;
}

std::vector<double> violations(const std::vector<double>& b,
                               const std::vector<double>& e_a) {
  std::vector<double> eb = elementary_symmetric_all(b);
  std::vector<double> v(e_a.size() - 1);
  for (std::size_t k = 0; k + 1 < e_a.size(); ++k)
    v[k] = std::max(0.0, (e_a[k] - eb[k]) / e_a[k]);
  return v;
}

}  // namespace

double penalized_objective(const std::vector<double>& u_free,
                           const std::vector<double>& e_a, double mu) {
  const std::size_t n = e_a.size();
  std::vector<double> u = lift(u_free, std::log(e_a[n - 1]));
  double obj = 0.0;
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    obj += u[i] * u[i];
    b[i] = std::exp(u[i]);
  }
  for (double v : violations(b, e_a)) obj += mu * v * v;
  return obj;
}

std::vector<double> penalized_gradient(const std::vector<double>& u_free,
                                       const std::vector<double>& e_a,
                                       double mu) {
  const std::size_t n = e_a.size();
  std::vector<double> u = lift(u_free, std::log(e_a[n - 1]));
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = std::exp(u[i]);

  std::vector<double> v = violations(b, e_a);
  SymmetricGradient sg = elementary_symmetric_gradient(b);

  std::vector<double> grad(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    double g = 2.0 * u[j] - 2.0 * u[n - 1];
    for (std::size_t k = 1; k < n; ++k) {
      if (v[k - 1] <= 0.0) continue;
      double dek = sg.d(k, j) * b[j] - sg.d(k, n - 1) * b[n - 1];
      g += mu * 2.0 * v[k - 1] * (-dek / e_a[k - 1]);
    }
    grad[j] = g;
  }
  return grad;
}

MinimizationResult minimize_ssli(const PositiveVector& a,
                                 const OptimizerConfig& cfg) {
  const std::size_t n = a.size();
  if (n < 2) throw Error("minimization needs n >= 2");
  for (std::size_t i = 0; i + 1 < cfg.penalty_schedule.size(); ++i)
    if (!(cfg.penalty_schedule[i] < cfg.penalty_schedule[i + 1]) ||
        !(cfg.penalty_schedule[i] > 0.0))
      throw Error("penalty schedule must be positive and increasing");

  std::vector<double> e_a = elementary_symmetric_all(a.entries());
  std::vector<double> log_a = log_vector(a);
  std::vector<double> la_free(log_a.begin(), log_a.end() - 1);
  const double log_en = std::log(e_a[n - 1]);

  auto value_of = [&](const std::vector<double>& u_free) {
    double s = 0.0;
    for (double ui : lift(u_free, log_en)) s += ui * ui;
    return s;
  };
  auto b_of = [&](const std::vector<double>& u_free) {
    std::vector<double> b;
    for (double ui : lift(u_free, log_en)) b.push_back(std::exp(ui));
    return b;
  };
  auto residual_of = [&](const std::vector<double>& u_free) {
    return feasibility_check(a, PositiveVector(b_of(u_free)));
  };

  MinimizationResult res;
  res.target_value = 0.0;
  for (double l : log_a) res.target_value += l * l;

  const int iters_per_stage =
      std::max(1, cfg.max_iters / static_cast<int>(cfg.penalty_schedule.size()));

  constexpr double kProjTol = 1e-9;
  bool any_feasible = false;
  double best_value = 0.0;
  std::vector<double> best_u;
  Rng rng(cfg.seed);

  for (int start = 0; start < cfg.starts; ++start) {
    std::vector<double> u = la_free;
    if (start > 0)
      for (double& x : u) x += rng.uniform(-1.0, 1.0);

    for (double mu : cfg.penalty_schedule) {
      double f = penalized_objective(u, e_a, mu);
      for (int it = 0; it < iters_per_stage; ++it) {
        std::vector<double> g = penalized_gradient(u, e_a, mu);
        double gnorm2 = 0.0;
        for (double x : g) gnorm2 += x * x;
        if (gnorm2 < 1e-24) break;
        // Backtracking line search with an Armijo condition.
        double step = 1.0 / std::sqrt(std::max(1.0, gnorm2));
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
          std::vector<double> cand(u);
          for (std::size_t j = 0; j < cand.size(); ++j)
            cand[j] -= step * g[j];
          double fc = penalized_objective(cand, e_a, mu);
          if (fc <= f - 1e-4 * step * gnorm2) {
            u = std::move(cand);
            f = fc;
            moved = true;
            break;
          }
          step *= 0.5;
        }
        if (!moved || step * std::sqrt(gnorm2) < cfg.step_tol) break;
      }
    }

    // Restore feasibility: pull toward u = log a (always feasible) by the
    // smallest amount that satisfies the constraints.
    double res_u = residual_of(u);
    if (res_u > kProjTol) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        std::vector<double> cand(u.size());
        for (std::size_t j = 0; j < u.size(); ++j)
          cand[j] = (1.0 - mid) * u[j] + mid * la_free[j];
        if (residual_of(cand) <= kProjTol)
          hi = mid;
        else
          lo = mid;
      }
      for (std::size_t j = 0; j < u.size(); ++j)
        u[j] = (1.0 - hi) * u[j] + hi * la_free[j];
      res_u = residual_of(u);
    }

    double val = value_of(u);
    res.per_start_trace.push_back({start, val, res_u});
    if (res_u <= kProjTol && (!any_feasible || val < best_value)) {
      any_feasible = true;
      best_value = val;
      best_u = u;
    }
  }

  if (!any_feasible) throw DidNotConverge();
  res.best_b = PositiveVector(b_of(best_u));
  res.best_value = best_value;
  res.gap = best_value - res.target_value;
  res.feasibility_residual = residual_of(best_u);
  return res;
}

}  // namespace logineq
