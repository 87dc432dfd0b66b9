#pragma once

#include "logineq/core.hpp"

#include <cstdint>

namespace logineq {

struct DidNotConverge : Error {
  DidNotConverge() : Error("no start reached the feasibility tolerance") {}
};

struct OptimizerConfig {
  int starts = 16;
  int max_iters = 5000;
  std::vector<double> penalty_schedule{1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
  double step_tol = 1e-12;
  std::uint64_t seed = 0;
};

struct StartTrace {
  int start = 0;
  double final_value = 0.0;
  double residual = 0.0;
};

struct MinimizationResult {
  PositiveVector best_b;
  double best_value = 0.0;
  double target_value = 0.0;  // sum (log a_i)^2
  double gap = 0.0;           // best_value - target_value, never clamped
  double feasibility_residual = 0.0;
  std::vector<StartTrace> per_start_trace;
};

// Relative violation of the feasible-set constraints:
//   max over k<n of max(0, e_k(a) - e_k(b)) / e_k(a), and
//   |e_n(a) - e_n(b)| / e_n(a).
double feasibility_check(const PositiveVector& a, const PositiveVector& b);

// Minimizes sum (log b_i)^2 over b with e_k(b) >= e_k(a) (k < n) and
// e_n(b) = e_n(a). Works in u = log b with the product constraint
// eliminated exactly (u_n = log e_n(a) - sum u_i), penalty method plus
// backtracking gradient descent, multi-start around u = log a.
MinimizationResult minimize_ssli(const PositiveVector& a,
                                 const OptimizerConfig& cfg = {});

// Penalized objective and its analytic gradient in the free coordinates
// u_1..u_{n-1}; exposed for the finite-difference cross-check.
double penalized_objective(const std::vector<double>& u_free,
                           const std::vector<double>& e_a, double mu);
std::vector<double> penalized_gradient(const std::vector<double>& u_free,
                                       const std::vector<double>& e_a,
                                       double mu);

}  // namespace logineq
