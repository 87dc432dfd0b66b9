#include "logineq/expineq.hpp"
#include "logineq/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace logineq;

TEST_CASE("zero-sum triple invariants") {
  ZeroSumTriple t(3, -1, -2);
  CHECK(t.sum_of_squares() == 14.0);
  CHECK(t.pairwise_sum() == -7.0);
  CHECK_THROWS(ZeroSumTriple(1, 2, -3));  // not sorted
  CHECK_THROWS(ZeroSumTriple(3, 1, -2));  // nonzero sum
}

TEST_CASE("p equals -r^2/2 for zero-sum triples") {
  Rng rng(51);
  for (int t = 0; t < 5000; ++t) {
    double u = rng.uniform(-4, 4), v = rng.uniform(-4, 4);
    double vals[3] = {u, v, -u - v};
    std::sort(vals, vals + 3, std::greater<double>{});
    ZeroSumTriple z(vals[0], vals[1], vals[2]);
    CHECK(z.pairwise_sum() ==
          doctest::Approx(-z.sum_of_squares() / 2).epsilon(1e-10));
  }
}

TEST_CASE("cardano bound worked values") {
  ZeroSumTriple t(3, -1, -2);
  CHECK(cardano_bound(t) == doctest::Approx(-6.240251469155712));
  CHECK(t.pairwise_sum() < cardano_bound(t));

  ZeroSumTriple deg(2, -1, -1);
  CHECK(cardano_bound(deg) == doctest::Approx(-3.0));
  CHECK(deg.pairwise_sum() == doctest::Approx(-3.0));  // equality at D = 0
}

TEST_CASE("bound slack vanishes along a degeneration path") {
  // Walk x down to the domain endpoint where two entries merge.
  double r2 = 6.0;
  double hi = std::sqrt(2.0 * r2 / 3.0);
  double prev_slack = 1e9;
  for (double f : {0.5, 0.1, 0.01, 1e-4, 1e-7}) {
    ZeroSumTriple t = triple_from_x(r2, hi * (1.0 - f) + std::sqrt(r2 / 6.0) * f);
    double slack = cardano_bound(t) - t.pairwise_sum();
    CHECK(slack >= 0.0);
    CHECK(slack <= prev_slack + 1e-12);
    prev_slack = slack;
  }
  CHECK(prev_slack <= 1e-4);
}

TEST_CASE("cardano exponential inequality worked example") {
  ZeroSumTriple t(3, -1, -2);
  CardanoReport r = cardano_exp_inequality(t, t);
  CHECK(r.lhs_u1 == doctest::Approx(7.441321919475181));
  CHECK(r.rhs_u1 == doctest::Approx(15.907600935484322));
  CHECK(r.holds);
  CHECK(r.slack_u1 == doctest::Approx(r.slack_u2));  // symmetric inputs

  // Distinct second triple at the same r^2.
  double s = std::sqrt(14.0 / 3.5);
  ZeroSumTriple abc(1.0 * s, 0.5 * s, -1.5 * s);
  CardanoReport r2 = cardano_exp_inequality(t, abc);
  CHECK(r2.holds);

  CHECK_THROWS_AS(cardano_exp_inequality(t, ZeroSumTriple(1, 0, -1)),
                  SumOfSquaresMismatch);
  CHECK_THROWS_AS(
      cardano_exp_inequality(ZeroSumTriple(2, -1, -1), ZeroSumTriple(2, -1, -1)),
      DegenerateTriple);
}

TEST_CASE("example family monotone on both intervals") {
  PolynomialFamily fam;
  fam.members = {{{1, 0, -1}}, {{-1, 1}}, {{0, -1, 1}}};
  fam.t_lo = 1.0;
  fam.t_hi = 4.0;
  FamilyReport inc =
      family_monotone_verdict(fam, MonotoneBranch::increasing);
  CHECK(inc.hypothesis_ok);
  CHECK(inc.monotone);

  fam.t_lo = 0.25;
  fam.t_hi = 1.0;
  FamilyReport dec =
      family_monotone_verdict(fam, MonotoneBranch::decreasing);
  CHECK(dec.hypothesis_ok);
  CHECK(dec.monotone);

  // Outside the admissible intervals the derivative ordering breaks.
  fam.t_lo = 0.0;
  fam.t_hi = 0.2;
  FamilyReport bad =
      family_monotone_verdict(fam, MonotoneBranch::decreasing);
  CHECK_FALSE(bad.hypothesis_ok);
}

TEST_CASE("product_h variant with h(t) = m t matches scaled plain variant") {
  PolynomialFamily fam;
  fam.members = {{{1, 0, -1}}, {{-1, 1}}, {{0, -1, 1}}};
  fam.t_lo = 1.0;
  fam.t_hi = 4.0;
  const double m = 2.0;
  FamilyReport prod = family_monotone_verdict(
      fam, MonotoneBranch::increasing, FamilyVariant::product_h,
      Polynomial{{0.0, m}});
  CHECK(prod.hypothesis_ok);
  CHECK(prod.monotone);

  PolynomialFamily scaled = fam;
  for (Polynomial& p : scaled.members)
    for (double& c : p.coeffs) c *= m;
  FamilyReport plain =
      family_monotone_verdict(scaled, MonotoneBranch::increasing);
  CHECK(plain.monotone == prod.monotone);
}

TEST_CASE("constant zero family is trivially monotone") {
  PolynomialFamily fam;
  fam.members = {{{0.0}}, {{0.0}}, {{0.0}}};
  fam.t_lo = 0.0;
  fam.t_hi = 1.0;
  FamilyReport r = family_monotone_verdict(fam, MonotoneBranch::increasing);
  CHECK(r.monotone);
  for (double g : r.g_values) CHECK(g == 3.0);
}

TEST_CASE("triple_from_x endpoints and interior") {
  ZeroSumTriple upper = triple_from_x(6.0, 2.0);
  CHECK(upper.u == 2.0);
  CHECK(upper.v == doctest::Approx(-1.0));
  CHECK(upper.w == doctest::Approx(-1.0));

  ZeroSumTriple lower = triple_from_x(6.0, 1.0);
  CHECK(lower.v == doctest::Approx(1.0));
  CHECK(lower.w == doctest::Approx(-2.0));

  ZeroSumTriple mid = triple_from_x(14.0, 3.0);
  CHECK(mid.v == doctest::Approx(-1.0));
  CHECK(mid.w == doctest::Approx(-2.0));

  CHECK_THROWS_AS(triple_from_x(6.0, 0.5), OutOfDomain);
  CHECK_THROWS_AS(triple_from_x(6.0, 2.5), OutOfDomain);
}

TEST_CASE("triple_from_x satisfies the cubic X^3 + pX - uvw = 0") {
  Rng rng(52);
  for (int t = 0; t < 2000; ++t) {
    double r2 = rng.uniform(0.5, 30.0);
    double lo = std::sqrt(r2 / 6.0), hi = std::sqrt(2 * r2 / 3.0);
    ZeroSumTriple z = triple_from_x(r2, rng.uniform(lo, hi));
    CHECK(z.sum_of_squares() == doctest::Approx(r2).epsilon(1e-12));
    double p = z.pairwise_sum(), q = z.product();
    for (double root : {z.u, z.v, z.w})
      CHECK(std::abs(root * root * root + p * root - q) <=
            1e-9 * std::max(1.0, r2 * hi));
  }
}

TEST_CASE("exp sum monotone equivalence") {
  ZeroSumTriple abc(1, 1, -2), xyz(2, -1, -1);
  TripleOrderReport r = exp_sum_monotone_equiv(abc, xyz);
  CHECK(r.exp_sum_abc == doctest::Approx(5.5718989401547026));
  CHECK(r.exp_sum_xyz == doctest::Approx(8.124814981273534));
  CHECK(r.exp_sum_leq);
  CHECK(r.top_leq);
  CHECK(r.biconditional);
  CHECK(r.reconstruction_err <= 1e-9);

  TripleOrderReport self = exp_sum_monotone_equiv(abc, abc);
  CHECK(self.biconditional);
}

TEST_CASE("biconditional across the whole domain grid") {
  ZeroSumTriple abc(1, 1, -2);
  for (int i = 0; i < 64; ++i) {
    double x = 1.0 + (2.0 - 1.0) * i / 63.0;
    ZeroSumTriple xyz = triple_from_x(6.0, x);
    CHECK(exp_sum_monotone_equiv(abc, xyz).biconditional);
  }
}

TEST_CASE("exp_sum_weak_log") {
  PositiveVector x({2, 1}), y({4, 0.5});
  CHECK(exp_sum_weak_log(x, y, 1.0) == HypothesisStatus::satisfied);
  CHECK(exp_sum_weak_log(x, x, 1.0) == HypothesisStatus::satisfied);
  // Hypothesis fails when x dominates y.
  CHECK(exp_sum_weak_log(PositiveVector({4, 3}), PositiveVector({1, 1}), 1.0) ==
        HypothesisStatus::not_satisfied);
}
