#include "logineq/sympoly.hpp"
#include "logineq/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace logineq;

TEST_CASE("all-ones gives binomial coefficients") {
  SymmetricProfile p = elementary_symmetric_all(PositiveVector({1, 1, 1, 1, 1}));
  CHECK(p.values == std::vector<double>{5, 10, 10, 5, 1});
}

TEST_CASE("worked profiles") {
  CHECK(elementary_symmetric_all(std::vector<double>{14, 2, 10}) ==
        std::vector<double>{26, 188, 280});
  CHECK(elementary_symmetric_all(std::vector<double>{20, 2, 7}) ==
        std::vector<double>{29, 194, 280});
  CHECK(elementary_symmetric_all(std::vector<double>{6, 5, 7})[2] == 210.0);
  CHECK(elementary_symmetric_all(std::vector<double>{10, 8, 3})[2] == 240.0);
}

TEST_CASE("profile invariants: e_1 sum, e_n product") {
  Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 1 + rng.index(10);
    std::vector<double> x(n);
    double sum = 0, prod = 1;
    for (double& v : x) {
      v = std::exp(rng.uniform(-2, 2));
      sum += v;
      prod *= v;
    }
    std::vector<double> e = elementary_symmetric_all(x);
    CHECK(e[0] == doctest::Approx(sum).epsilon(1e-12));
    CHECK(e[n - 1] == doctest::Approx(prod).epsilon(1e-12));
    for (double ek : e) CHECK(ek > 0.0);
  }
}

TEST_CASE("permutation invariance, exact mode") {
  Rng rng(22);
  std::vector<Rational> x{Rational(3, 7), Rational(22, 5), Rational(9),
                          Rational(1, 13), Rational(4, 3)};
  std::vector<Rational> base = elementary_symmetric_all(x);
  for (int t = 0; t < 50; ++t) {
    for (std::size_t i = x.size(); i > 1; --i)
      std::swap(x[i - 1], x[rng.index(i)]);
    CHECK(elementary_symmetric_all(x) == base);
  }
}

TEST_CASE("entrywise monotonicity") {
  Rng rng(23);
  for (int t = 0; t < 10'000; ++t) {
    std::size_t n = 2 + rng.index(6);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::exp(rng.uniform(-2, 2));
      y[i] = x[i] + rng.uniform(0.0, 1.0);
    }
    std::vector<double> ex = elementary_symmetric_all(x);
    std::vector<double> ey = elementary_symmetric_all(y);
    for (std::size_t k = 0; k < n; ++k) CHECK(ex[k] <= ey[k] * (1 + 1e-12));
  }
}

TEST_CASE("gradient worked examples") {
  SymmetricGradient g = elementary_symmetric_gradient(PositiveVector({2, 3}));
  CHECK(g.d(1, 0) == 1.0);
  CHECK(g.d(1, 1) == 1.0);
  CHECK(g.d(2, 0) == 3.0);
  CHECK(g.d(2, 1) == 2.0);

  SymmetricGradient u = elementary_symmetric_gradient(PositiveVector({1, 1, 1}));
  for (int i = 0; i < 3; ++i) CHECK(u.d(2, i) == 2.0);
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(24);
  const double h = 1e-6;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 5;
    std::vector<double> x(n);
    for (double& v : x) v = std::exp(rng.uniform(-1, 1));
    SymmetricGradient g = elementary_symmetric_gradient(x);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> hi = x, lo = x;
      hi[i] += h;
      lo[i] -= h;
      std::vector<double> ehi = elementary_symmetric_all(hi);
      std::vector<double> elo = elementary_symmetric_all(lo);
      for (std::size_t k = 1; k <= n; ++k) {
        double fd = (ehi[k - 1] - elo[k - 1]) / (2 * h);
        double an = g.d(k, i);
        CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
      }
    }
  }
}

TEST_CASE("vieta roundtrip") {
  CHECK(vieta_roundtrip(PositiveVector::from_exact(
            {Rational(2), Rational(2), Rational(2)})) == 0.0);
  CHECK(vieta_roundtrip(PositiveVector({4, 2, 1})) <= 1e-8);
  CHECK(vieta_roundtrip(PositiveVector({3, 2, 2})) <= 1e-8);
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.index(12);
    std::vector<double> x(n);
    for (double& v : x) v = std::exp(rng.uniform(-1.5, 1.5));
    CHECK(vieta_roundtrip(PositiveVector(x)) <= 1e-8);
  }
}

TEST_CASE("vieta hand expansions") {
  // (t-4)(t-2)(t-1) = t^3 - 7t^2 + 14t - 8  =>  profile (7, 14, 8)
  CHECK(elementary_symmetric_all(std::vector<double>{4, 2, 1}) ==
        std::vector<double>{7, 14, 8});
  CHECK(elementary_symmetric_all(std::vector<double>{3, 2, 2}) ==
        std::vector<double>{7, 16, 12});
}
