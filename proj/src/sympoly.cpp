#include "logineq/sympoly.hpp"

#include <cmath>

namespace logineq {

namespace {

template <typename T>
std::vector<T> esym_all(const std::vector<T>& x) {
  const std::size_t n = x.size();
  std::vector<T> e(n + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += x[i] * e[k - 1];
  }
  return std::vector<T>(e.begin() + 1, e.end());
}

}  // namespace

std::vector<double> elementary_symmetric_all(const std::vector<double>& x) {
  return esym_all(x);
}

std::vector<Rational> elementary_symmetric_all(const std::vector<Rational>& x) {
  return esym_all(x);
}

SymmetricProfile elementary_symmetric_all(const PositiveVector& x) {
  SymmetricProfile p;
  p.values = esym_all(x.entries());
  if (x.has_exact()) p.exact = esym_all(*x.exact());
  return p;
}

SymmetricGradient elementary_symmetric_gradient(const std::vector<double>& x) {
  const std::size_t n = x.size();
  SymmetricGradient g;
  g.partials.assign(n, std::vector<double>(n, 0.0));
  std::vector<double> reduced(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    reduced.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) reduced.push_back(x[j]);
    std::vector<double> e = esym_all(reduced);  // e_1..e_{n-1} of reduced
    g.partials[0][i] = 1.0;                     // d e_1 / d x_i
    for (std::size_t k = 2; k <= n; ++k) g.partials[k - 1][i] = e[k - 2];
  }
  return g;
}

SymmetricGradient elementary_symmetric_gradient(const PositiveVector& x) {
  return elementary_symmetric_gradient(x.entries());
}

double vieta_roundtrip(const PositiveVector& x) {
  const std::size_t n = x.size();
  if (x.has_exact()) {
    // Exact convolution of prod(t - x_i), ascending degree.
    std::vector<Rational> coeffs{Rational(1)};
    for (const Rational& r : *x.exact()) {
      std::vector<Rational> next(coeffs.size() + 1, Rational(0));
      for (std::size_t d = 0; d < coeffs.size(); ++d) {
        next[d] -= r * coeffs[d];
        next[d + 1] += coeffs[d];
      }
      coeffs = std::move(next);
    }
    std::vector<Rational> prof = elementary_symmetric_all(*x.exact());
    Rational worst(0);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational from_poly = coeffs[n - k];
      if (k % 2 == 1) from_poly = -from_poly;
      Rational dev = abs(from_poly - prof[k - 1]) / abs(prof[k - 1]);
      if (dev > worst) worst = dev;
    }
    return static_cast<double>(worst);
  }
  std::vector<double> coeffs{1.0};
  for (double r : x.entries()) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d] -= r * coeffs[d];
      next[d + 1] += coeffs[d];
    }
    coeffs = std::move(next);
  }
  std::vector<double> prof = elementary_symmetric_all(x.entries());
  double worst = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double from_poly = coeffs[n - k];
    if (k % 2 == 1) from_poly = -from_poly;
    double dev = std::abs(from_poly - prof[k - 1]) / std::abs(prof[k - 1]);
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace logineq
