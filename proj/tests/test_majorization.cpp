#include "logineq/majorization.hpp"
#include "logineq/rng.hpp"
#include "logineq/sympoly.hpp"

#include <doctest.h>

#include <cmath>

using namespace logineq;

TEST_CASE("paper pairs majorize") {
  CHECK(majorize(PositiveVector({3, 2, 2}), PositiveVector({4, 2, 1})).strong);
  CHECK(majorize(PositiveVector({4, 4, 4}), PositiveVector({10, 1, 1})).strong);
}

TEST_CASE("equal e_k without majorization") {
  PositiveVector x({2, 2, 2}), y({1, 1, 1});
  MajorizationVerdict v = majorize(x, y);
  CHECK_FALSE(v.strong);
  std::vector<double> ex = elementary_symmetric_all(x.entries());
  std::vector<double> ey = elementary_symmetric_all(y.entries());
  for (std::size_t k = 0; k < 3; ++k) CHECK(ex[k] >= ey[k]);
}

TEST_CASE("strong implies both weak relations") {
  Rng rng(31);
  for (int t = 0; t < 2000; ++t) {
    std::size_t n = 2 + rng.index(8);
    std::vector<double> x(n), y(n);
    for (double& v : x) v = std::exp(rng.uniform(-3, 3));
    for (double& v : y) v = std::exp(rng.uniform(-3, 3));
    MajorizationVerdict v = majorize(PositiveVector(x), PositiveVector(y));
    if (v.strong) {
      CHECK(v.weak_below);
      CHECK(v.weak_above);
    }
    if (v.log_strong) CHECK(v.log_weak_below);
  }
}

TEST_CASE("hlp reflexivity") {
  PositiveVector v({5, 3, 2, 2});
  for (Relation r :
       {Relation::strong, Relation::weak_below, Relation::weak_above})
    CHECK(hlp_convex_test(v, v, r));
  CHECK(hlp_convex_test(PositiveVector({3, 2, 2}), PositiveVector({4, 2, 1}),
                        Relation::strong));
}

TEST_CASE("majorize agrees with hlp oracle on random pairs") {
  Rng rng(32);
  int disagreements = 0;
  for (int t = 0; t < 10'000; ++t) {
    std::size_t n = 2 + rng.index(9);
    std::vector<double> x(n), y(n);
    for (double& v : x) v = std::exp(rng.uniform(-3, 3));
    for (double& v : y) v = std::exp(rng.uniform(-3, 3));
    // Mix in related pairs so the relations are sometimes true.
    if (t % 3 == 0) y = x;
    if (t % 7 == 0)
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + rng.uniform(0, 1);
    PositiveVector xv(x), yv(y);
    MajorizationVerdict v = majorize(xv, yv);
    if (v.strong != hlp_convex_test(xv, yv, Relation::strong)) ++disagreements;
    if (v.weak_below != hlp_convex_test(xv, yv, Relation::weak_below))
      ++disagreements;
    if (v.weak_above != hlp_convex_test(xv, yv, Relation::weak_above))
      ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("lemma 2.3 hand example") {
  // (1,1) vs (2, 1/2): prefix products 2 >= 1 and 1 == 1.
  PositiveVector x({1, 1}), y({2, 0.5});
  MajorizationVerdict v = majorize(x, y);
  CHECK(v.log_weak_below);
  CHECK(v.weak_below);
  CHECK(log_implications_check(x, y));
  CHECK(log_implications_check(x, x));
}

TEST_CASE("log implications hold on fuzzed pairs") {
  Rng rng(33);
  for (int t = 0; t < 100'000; ++t) {
    std::size_t n = 2 + rng.index(6);
    std::vector<double> x(n), y(n);
    for (double& v : x) v = std::exp(rng.uniform(-2, 2));
    for (double& v : y) v = std::exp(rng.uniform(-2, 2));
    CHECK(log_implications_check(PositiveVector(x), PositiveVector(y)));
  }
}

TEST_CASE("schur-convexity consequences for convex increasing catalogs") {
  Rng rng(34);
  TolerancePolicy tol;
  auto phi_exp = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += std::exp(x);
    return s;
  };
  for (int t = 0; t < 2000; ++t) {
    std::size_t n = 2 + rng.index(5);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = std::exp(rng.uniform(-1, 1));
      x[i] = y[i] * rng.uniform(0.3, 1.0);  // entrywise below => x prec_w y
    }
    PositiveVector xv(x), yv(y);
    MajorizationVerdict v = majorize(xv, yv, tol);
    REQUIRE(v.weak_below);
    CHECK(phi_exp(x) <= phi_exp(y) + 1e-9);
  }
}

TEST_CASE("log_weak_below equals direct prefix-product comparison") {
  Rng rng(35);
  for (int t = 0; t < 5000; ++t) {
    std::size_t n = 2 + rng.index(6);
    std::vector<double> x(n), y(n);
    for (double& v : x) v = std::exp(rng.uniform(-2, 2));
    for (double& v : y) v = std::exp(rng.uniform(-2, 2));
    PositiveVector xv(x), yv(y);
    MajorizationVerdict v = majorize(xv, yv);
    std::vector<double> xd = sort_desc(x), yd = sort_desc(y);
    bool direct = true;
    double px = 1, py = 1;
    TolerancePolicy tol;
    for (std::size_t k = 0; k < n; ++k) {
      px *= xd[k];
      py *= yd[k];
      if (!tol.leq(px, py)) direct = false;
    }
    CHECK(v.log_weak_below == direct);
  }
}

TEST_CASE("length mismatch") {
  CHECK_THROWS_AS(majorize(PositiveVector({1, 2}), PositiveVector({1})),
                  LengthMismatch);
}
