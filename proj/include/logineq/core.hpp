#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logineq {

using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. Every precondition failure in the library throws one of
// these; the CLI maps them to exit code 64.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthMismatch : Error {
  LengthMismatch() : Error("vector lengths differ") {}
};
struct NonPositiveEntry : Error {
  NonPositiveEntry() : Error("entry must be strictly positive") {}
};
struct NotSorted : Error {
  NotSorted() : Error("sequence is not sorted as required") {}
};
struct WeightsNotNormalized : Error {
  WeightsNotNormalized() : Error("weights must be positive and sum to 1") {}
};
struct DomainError : Error {
  using Error::Error;
};

// Global comparison policy. All verdict-producing operations take one of
// these explicitly so that verdicts are reproducible and tunable.
struct TolerancePolicy {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;

  double margin(double u, double v) const {
    double m = std::abs(u) > std::abs(v) ? std::abs(u) : std::abs(v);
    double r = rel_tol * m;
    return abs_tol > r ? abs_tol : r;
  }
  bool leq(double u, double v) const { return u <= v + margin(u, v); }
  bool geq(double u, double v) const { return leq(v, u); }
  bool eq(double u, double v) const { return std::abs(u - v) <= margin(u, v); }
};

struct RealPair {
  double first = 0.0;
  double second = 0.0;
};

// Positive real vector, optionally carrying an exact rational mirror.
// The mirror is used by sympoly and by verdicts where exact equality of
// e_n matters (float cancellation can flip e_n(a)=e_n(b) checks).
class PositiveVector {
 public:
  PositiveVector() = default;
  explicit PositiveVector(std::vector<double> entries);
  PositiveVector(std::vector<double> entries, std::vector<Rational> exact);

  static PositiveVector from_exact(std::vector<Rational> exact);

  const std::vector<double>& entries() const { return entries_; }
  const std::optional<std::vector<Rational>>& exact() const { return exact_; }
  bool has_exact() const { return exact_.has_value(); }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<double> entries_;
  std::optional<std::vector<Rational>> exact_;
};

PositiveVector sort_desc(const PositiveVector& v);
PositiveVector sort_asc(const PositiveVector& v);

std::vector<double> sort_desc(std::vector<double> v);
std::vector<double> sort_asc(std::vector<double> v);

// Entrywise natural logarithm. Base-e is fixed for the whole artifact.
std::vector<double> log_vector(const PositiveVector& v);
std::vector<double> log_vector(const std::vector<double>& v);

// Chebyshev's sum inequality for two nondecreasing sequences:
// returns {lower, upper} with
//   upper = sum a_i b_i  >=  (1/n)(sum a)(sum b)  >=  lower = sum a_i b_{n+1-i}.
RealPair chebyshev_bounds(const std::vector<double>& a_sorted,
                          const std::vector<double>& b_sorted);

// Jensen gap for f(x) = x log(x+k):  sum l_i f(x_i) - f(sum l_i x_i) >= 0.
double jensen_gap(const std::vector<double>& weights,
                  const std::vector<double>& points, double k,
                  const TolerancePolicy& tol = {});

}  // namespace logineq
