#pragma once

#include "logineq/core.hpp"

namespace logineq {

struct OutOfDomain : Error {
  OutOfDomain() : Error("x outside the admissible interval D_r") {}
};
struct SumOfSquaresMismatch : Error {
  SumOfSquaresMismatch() : Error("triples must have equal sums of squares") {}
};
struct DegenerateTriple : Error {
  DegenerateTriple() : Error("triple entries must be distinct") {}
};
struct HypothesisViolated : Error {
  using Error::Error;
};

// Sorted zero-sum triple u >= v >= w, u+v+w = 0.
struct ZeroSumTriple {
  double u = 0.0, v = 0.0, w = 0.0;

  ZeroSumTriple() = default;
  ZeroSumTriple(double u_, double v_, double w_,
                const TolerancePolicy& tol = {});

  double sum_of_squares() const { return u * u + v * v + w * w; }
  double pairwise_sum() const { return u * v + v * w + w * u; }  // p
  double product() const { return u * v * w; }
  double exp_sum() const;
  bool distinct(double eps = 1e-9) const;
};

// Polynomial in one variable, coefficients by ascending degree.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double t) const;
  Polynomial derivative() const;
};

// n polynomials summing to the zero polynomial, studied on [t_lo, t_hi]
// through a uniform evaluation grid.
struct PolynomialFamily {
  std::vector<Polynomial> members;
  double t_lo = 0.0;
  double t_hi = 1.0;
  int grid_points = 257;
};

enum class FamilyVariant { plain, product_h, composed_h };
enum class MonotoneBranch { increasing, decreasing };

struct FamilyReport {
  bool hypothesis_ok = false;
  bool monotone = false;
  double first_failing_t = 0.0;    // meaningful when !hypothesis_ok
  std::string failed_hypothesis;   // which precondition failed
  std::vector<double> g_values;    // g (or g_h, H) on the grid
};

struct CardanoReport {
  double lhs_u1 = 0.0, rhs_u1 = 0.0, slack_u1 = 0.0;
  double lhs_u2 = 0.0, rhs_u2 = 0.0, slack_u2 = 0.0;
  bool holds = false;
};

struct TripleOrderReport {
  double exp_sum_abc = 0.0;
  double exp_sum_xyz = 0.0;
  bool exp_sum_leq = false;  // sum e^{abc} <= sum e^{xyz}
  bool top_leq = false;      // a <= x
  bool biconditional = false;
  double reconstruction_err = 0.0;  // worst |triple - triple_from_x| component
};

enum class HypothesisStatus { satisfied, not_satisfied };

// If log x prec_w log y, asserts sum e^{m x_i} <= sum e^{m y_i}.
HypothesisStatus exp_sum_weak_log(const PositiveVector& x,
                                  const PositiveVector& y, double m,
                                  const TolerancePolicy& tol = {});

// The bound -3 * cbrt(u^2 v^2 w^2 / 4); p(t) is strictly below it for
// distinct entries and meets it when two entries coincide.
double cardano_bound(const ZeroSumTriple& t);

CardanoReport cardano_exp_inequality(const ZeroSumTriple& xyz,
                                     const ZeroSumTriple& abc,
                                     const TolerancePolicy& tol = {});

FamilyReport family_monotone_verdict(const PolynomialFamily& fam,
                                     MonotoneBranch branch,
                                     FamilyVariant variant = FamilyVariant::plain,
                                     const Polynomial& h = {{0.0, 1.0}},
                                     const TolerancePolicy& tol = {});

// Inverse parametrization of sorted zero-sum triples with fixed r^2:
// x in D_r = [sqrt(r^2/6), sqrt(2 r^2/3)] determines y(x) >= z(x).
ZeroSumTriple triple_from_x(double r_squared, double x);

TripleOrderReport exp_sum_monotone_equiv(const ZeroSumTriple& abc,
                                         const ZeroSumTriple& xyz,
                                         const TolerancePolicy& tol = {});

}  // namespace logineq
