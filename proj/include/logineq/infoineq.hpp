#pragma once

#include "logineq/core.hpp"

#include <cstdint>

namespace logineq {

struct NotProbabilityVector : Error {
  NotProbabilityVector() : Error("entries must be positive and sum to 1") {}
};
struct NegativeShift : Error {
  NegativeShift() : Error("shifts must be nonnegative") {}
};

// Strictly positive probability vector. Zero entries are rejected; the
// 0 log 0 convention is out of scope.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> entries,
                             const TolerancePolicy& tol = {});

  const std::vector<double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<double> entries_;
};

struct ShiftSet {
  std::vector<double> ks;

  ShiftSet() = default;
  ShiftSet(std::initializer_list<double> init) : ks(init) { validate(); }
  explicit ShiftSet(std::vector<double> v) : ks(std::move(v)) { validate(); }

 private:
  void validate() const {
    for (double k : ks)
      if (k < 0.0) throw NegativeShift();
  }
};

struct GibbsReport {
  double geo_mean_b = 0.0;     // prod b_i^{a_i}
  double geo_mean_a = 0.0;     // prod a_i^{a_i}
  double cross_entropy = 0.0;  // sum a_i (-log b_i)
  double entropy = 0.0;        // sum a_i (-log a_i)
  double kl = 0.0;
  bool forms_agree = false;     // the four boolean verdicts coincide
  bool holds = false;           // the (shared) verdict
  bool variational_ok = false;  // random-xi sup/inf check passed
};

double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q,
                     const TolerancePolicy& tol = {});

// LHS - RHS of  sum a_i log(a_i/b_i + k) >= (sum a_i) log(sum a / sum b + k).
double stronger_log_sum_gap(const PositiveVector& a, const PositiveVector& b,
                            double k);

double generalized_log_sum_gap(const PositiveVector& a, const PositiveVector& b,
                               const ShiftSet& ks);

GibbsReport gibbs_forms(const ProbabilityVector& a, const ProbabilityVector& b,
                        const TolerancePolicy& tol = {},
                        int variational_samples = 1000,
                        std::uint64_t seed = 0);

// LHS - log prod(1 + k_s) for probability vectors.
double generalized_information_gap(const ProbabilityVector& a,
                                   const ProbabilityVector& b,
                                   const ShiftSet& ks);

class Rng;

// Uniform sampling on the simplex by exponential spacings; used by the
// variational checks and the fuzz campaigns.
std::vector<double> sample_simplex(std::size_t n, Rng& rng);

}  // namespace logineq
