#include "logineq/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace logineq {

namespace {

void check_positive(const std::vector<double>& entries) {
  if (entries.empty()) throw Error("vector must be nonempty");
  for (double x : entries) {
    if (!(x > 0.0) || !std::isfinite(x)) throw NonPositiveEntry();
  }
}

}  // namespace

PositiveVector::PositiveVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  check_positive(entries_);
}

PositiveVector::PositiveVector(std::vector<double> entries,
                               std::vector<Rational> exact)
    : entries_(std::move(entries)), exact_(std::move(exact)) {
  check_positive(entries_);
  if (exact_->size() != entries_.size()) throw LengthMismatch();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if ((*exact_)[i] <= 0) throw NonPositiveEntry();
    double f = static_cast<double>((*exact_)[i]);
    double scale = std::abs(entries_[i]);
    if (std::abs(f - entries_[i]) > 4.0 * scale * 2.3e-16)
      throw Error("exact mirror disagrees with float entries");
  }
}

PositiveVector PositiveVector::from_exact(std::vector<Rational> exact) {
  std::vector<double> entries;
  entries.reserve(exact.size());
  for (const Rational& r : exact) entries.push_back(static_cast<double>(r));
  return PositiveVector(std::move(entries), std::move(exact));
}

namespace {

// Stable sort by value; ties keep original index order.
template <typename Cmp>
std::vector<std::size_t> sorted_order(const std::vector<double>& v, Cmp cmp) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return cmp(v[i], v[j]); });
  return idx;
}

PositiveVector permuted(const PositiveVector& v,
                        const std::vector<std::size_t>& idx) {
  std::vector<double> entries;
  entries.reserve(idx.size());
  for (std::size_t i : idx) entries.push_back(v.entries()[i]);
  if (v.has_exact()) {
    std::vector<Rational> exact;
    exact.reserve(idx.size());
    for (std::size_t i : idx) exact.push_back((*v.exact())[i]);
    return PositiveVector(std::move(entries), std::move(exact));
  }
  return PositiveVector(std::move(entries));
}

}  // namespace

PositiveVector sort_desc(const PositiveVector& v) {
  return permuted(v, sorted_order(v.entries(), std::greater<double>{}));
}

PositiveVector sort_asc(const PositiveVector& v) {
  return permuted(v, sorted_order(v.entries(), std::less<double>{}));
}

std::vector<double> sort_desc(std::vector<double> v) {
  std::stable_sort(v.begin(), v.end(), std::greater<double>{});
  return v;
}

std::vector<double> sort_asc(std::vector<double> v) {
  std::stable_sort(v.begin(), v.end());
  return v;
}

std::vector<double> log_vector(const std::vector<double>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) {
    if (!(x > 0.0)) throw NonPositiveEntry();
    out.push_back(std::log(x));
  }
  return out;
}

std::vector<double> log_vector(const PositiveVector& v) {
  return log_vector(v.entries());
}

RealPair chebyshev_bounds(const std::vector<double>& a_sorted,
                          const std::vector<double>& b_sorted) {
  const std::size_t n = a_sorted.size();
  if (n != b_sorted.size()) throw LengthMismatch();
  if (!std::is_sorted(a_sorted.begin(), a_sorted.end()) ||
      !std::is_sorted(b_sorted.begin(), b_sorted.end()))
    throw NotSorted();
  double lower = 0.0, upper = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lower += a_sorted[i] * b_sorted[n - 1 - i];
    upper += a_sorted[i] * b_sorted[i];
  }
  return {lower, upper};
}

double jensen_gap(const std::vector<double>& weights,
                  const std::vector<double>& points, double k,
                  const TolerancePolicy& tol) {
  if (weights.size() != points.size()) throw LengthMismatch();
  if (weights.empty()) throw Error("empty input");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw WeightsNotNormalized();
    wsum += w;
  }
  if (!tol.eq(wsum, 1.0)) throw WeightsNotNormalized();

  auto f = [k](double x) { return x * std::log(x + k); };
  double mean = 0.0, lhs = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] + k > 0.0))
      throw DomainError("point + shift must be positive");
    mean += weights[i] * points[i];
    lhs += weights[i] * f(points[i]);
  }
  if (!(mean + k > 0.0)) throw DomainError("mean + shift must be positive");
  return lhs - f(mean);
}

}  // namespace logineq
