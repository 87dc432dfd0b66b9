#pragma once

#include "logineq/core.hpp"

namespace logineq {

// The vector (e_1(x), ..., e_n(x)) of elementary symmetric polynomial
// values, exact when the input carries a rational mirror.
struct SymmetricProfile {
  std::vector<double> values;
  std::optional<std::vector<Rational>> exact;

  double e(std::size_t k) const { return values.at(k - 1); }  // 1-based
  std::size_t n() const { return values.size(); }
};

// partials[k-1][i] = d e_k / d x_i = e_{k-1} of x with entry i removed.
struct SymmetricGradient {
  std::vector<std::vector<double>> partials;

  double d(std::size_t k, std::size_t i) const { return partials.at(k - 1).at(i); }
};

// All e_k at once via the incremental recurrence (high k to low k, no
// subtraction, stable for positive inputs). O(n^2) multiplications.
SymmetricProfile elementary_symmetric_all(const PositiveVector& x);

std::vector<double> elementary_symmetric_all(const std::vector<double>& x);
std::vector<Rational> elementary_symmetric_all(const std::vector<Rational>& x);

// Leave-one-out gradients, O(n^3). Chosen over polynomial division, which
// is ill-conditioned near repeated roots.
SymmetricGradient elementary_symmetric_gradient(const PositiveVector& x);
SymmetricGradient elementary_symmetric_gradient(const std::vector<double>& x);

// Forms prod(t - x_i) by coefficient convolution, reads off (-1)^k e_k and
// returns the max relative deviation from elementary_symmetric_all.
double vieta_roundtrip(const PositiveVector& x);

}  // namespace logineq
