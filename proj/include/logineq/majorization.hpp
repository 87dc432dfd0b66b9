#pragma once

#include "logineq/core.hpp"

namespace logineq {

enum class Relation { strong, weak_below, weak_above };

// One (k, lhs, rhs) entry per prefix comparison, recorded as a witness.
struct PrefixTrace {
  std::vector<std::tuple<std::size_t, double, double>> steps;
};

// All five order relations between two positive vectors.
//   strong:          x prec y  (descending prefix sums, equal totals)
//   weak_below:      x prec_w y (descending prefix sums only)
//   weak_above:      x prec^w y (ascending prefix sums of x dominate y's)
//   log_*:           the same relations applied to the entrywise logs,
//                    computed as prefix products of the sorted vectors.
struct MajorizationVerdict {
  bool strong = false;
  bool weak_below = false;
  bool weak_above = false;
  bool log_weak_below = false;
  bool log_weak_above = false;
  bool log_strong = false;
  PrefixTrace sum_trace_desc;   // descending prefix sums (strong/weak_below)
  PrefixTrace sum_trace_asc;    // ascending prefix sums (weak_above)
  PrefixTrace prod_trace_desc;  // descending prefix products (log_weak_below)
  PrefixTrace prod_trace_asc;   // ascending prefix products (log_weak_above)
};

MajorizationVerdict majorize(const PositiveVector& x, const PositiveVector& y,
                             const TolerancePolicy& tol = {});

// Hardy-Littlewood-Polya convex-function side, as a finite exact oracle:
// hinge functions max(z-t,0) (resp. reversed hinges max(t-z,0)) with
// breakpoints at the entries of y, plus the total-sum comparisons.
bool hlp_convex_test(const PositiveVector& x, const PositiveVector& y,
                     Relation relation, const TolerancePolicy& tol = {});

// Checks the two implications
//   log x prec_w log y  =>  x prec_w y
//   x prec^w y          =>  log x prec^w log y
// against the computed verdicts; false signals an implementation bug.
bool log_implications_check(const PositiveVector& x, const PositiveVector& y,
                            const TolerancePolicy& tol = {});

}  // namespace logineq
