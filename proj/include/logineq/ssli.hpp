#pragma once

#include "logineq/core.hpp"
#include "logineq/majorization.hpp"

#include <cstdint>

namespace logineq {

struct SsliInstance {
  PositiveVector a;
  PositiveVector b;
};

enum class SsliHypothesis { conjecture_1_2, thm_3_2a, thm_3_2b, thm_3_4, none };

struct EntryNotAboveOne : Error {
  EntryNotAboveOne() : Error("entries must be > 1") {}
};
struct NonNegativeExponent : Error {
  NonNegativeExponent() : Error("exponent must be negative") {}
};
struct SearchBudgetExceeded : Error {
  SearchBudgetExceeded() : Error("pairing search budget exceeded") {}
};

struct SsliVerdict {
  SsliHypothesis hypothesis = SsliHypothesis::none;
  double lhs = 0.0;  // sum (log a_i)^2
  double rhs = 0.0;  // sum (log b_i)^2
  bool holds = false;
  double slack = 0.0;  // rhs - lhs
};

// A bijection between entries of a and entries of b whose pairs, listed in
// the order found, have nonincreasing ratios b/a and nonincreasing
// products a*b. `found == false` with exhaustive == true is a
// proof-of-exhaustion for the search tree.
struct PairingResult {
  bool found = false;
  bool exhaustive = false;
  std::vector<std::size_t> permutation_a;  // order in which a-entries appear
  std::vector<std::size_t> permutation_b;  // matched b-entry per position
  std::vector<double> ratios;              // b/a after pairing, nonincreasing
  std::vector<double> products;            // a*b after pairing, nonincreasing
  std::uint64_t nodes_explored = 0;
};

struct Remark35Report {
  bool a_majorized_by_b = false;
  int ssli_direction = 0;  // -1: lhs<rhs, +1: lhs>rhs, 0: equal within tol
  bool en_equal = false;
  bool sorted_equal = false;  // sort_desc(a) == sort_desc(b) within tol
  double lhs = 0.0;
  double rhs = 0.0;
};

double sum_squared_logs(const PositiveVector& v);

// Conjectured SSLI hypothesis: e_k(a) <= e_k(b) for k < n and e_n(a) = e_n(b).
// Exact when both vectors carry rational mirrors.
bool conjecture_hypothesis(const SsliInstance& inst,
                           const TolerancePolicy& tol = {});

struct PairingOptions {
  bool common_reindex = false;     // restrict to the given index pairing
  std::size_t exhaustive_cutoff = 10;
  std::uint64_t node_budget = 50'000'000;
};

PairingResult find_pairing(const SsliInstance& inst,
                           const TolerancePolicy& tol = {},
                           const PairingOptions& opts = {});

SsliVerdict thm32_verdict(const SsliInstance& inst,
                          const TolerancePolicy& tol = {},
                          const PairingOptions& opts = {});

// Sum of powered logarithms: entries > 1, p < 0, hypothesis a prec^w b.
SsliVerdict powered_logs_verdict(const PositiveVector& a,
                                 const PositiveVector& b, double p,
                                 const TolerancePolicy& tol = {});

SsliVerdict conjecture_verdict(const SsliInstance& inst,
                               const TolerancePolicy& tol = {});

Remark35Report remark35_boundary(const PositiveVector& a,
                                 const PositiveVector& b,
                                 const TolerancePolicy& tol = {});

// ~a_k = 1/a_{n+1-k}, likewise for b; maps a (3.2a) instance to (3.2b).
SsliInstance reciprocal(const SsliInstance& inst);

}  // namespace logineq
