#include "logineq/expineq.hpp"

#include "logineq/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logineq {

ZeroSumTriple::ZeroSumTriple(double u_, double v_, double w_,
                             const TolerancePolicy& tol)
    : u(u_), v(v_), w(w_) {
  if (!(u >= v && v >= w)) throw Error("triple must be sorted nonincreasing");
  double scale = std::max({std::abs(u), std::abs(v), std::abs(w), 1.0});
  if (std::abs(u + v + w) > std::max(tol.abs_tol, tol.rel_tol * scale))
    throw Error("triple must sum to zero");
}

double ZeroSumTriple::exp_sum() const {
  return std::exp(u) + std::exp(v) + std::exp(w);
}

bool ZeroSumTriple::distinct(double eps) const {
  return std::abs(u - v) > eps && std::abs(v - w) > eps;
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * t + coeffs[d];
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    d.coeffs.push_back(static_cast<double>(k) * coeffs[k]);
  if (d.coeffs.empty()) d.coeffs.push_back(0.0);
  return d;
}

HypothesisStatus exp_sum_weak_log(const PositiveVector& x,
                                  const PositiveVector& y, double m,
                                  const TolerancePolicy& tol) {
  if (x.size() != y.size()) throw LengthMismatch();
  if (!(m > 0.0)) throw DomainError("m must be positive");
  if (!majorize(x, y, tol).log_weak_below)
    return HypothesisStatus::not_satisfied;
  double sx = 0.0, sy = 0.0;
  for (double t : x.entries()) sx += std::exp(m * t);
  for (double t : y.entries()) sy += std::exp(m * t);
  if (!tol.leq(sx, sy))
    throw HypothesisViolated(
        "exp-sum inequality failed under log weak majorization");
  return HypothesisStatus::satisfied;
}

double cardano_bound(const ZeroSumTriple& t) {
  double sq = t.u * t.u * t.v * t.v * t.w * t.w;
  return -3.0 * std::cbrt(sq / 4.0);
}

CardanoReport cardano_exp_inequality(const ZeroSumTriple& xyz,
                                     const ZeroSumTriple& abc,
                                     const TolerancePolicy& tol) {
  double r2 = xyz.sum_of_squares();
  if (!tol.eq(r2, abc.sum_of_squares())) throw SumOfSquaresMismatch();
  if (r2 == 0.0) throw DomainError("r^2 must be nonzero");
  if (!xyz.distinct() || !abc.distinct()) throw DegenerateTriple();

  CardanoReport rep;
  auto side = [](const ZeroSumTriple& s, const ZeroSumTriple& o, double& lhs,
                 double& rhs) {
    lhs = std::exp(s.u * s.v) + std::exp(s.v * s.w) + std::exp(s.w * s.u);
    rhs = (std::exp(s.u * s.u) + std::exp(s.v * s.v) + std::exp(s.w * s.w)) *
          std::exp(cardano_bound(o));
  };
  side(xyz, abc, rep.lhs_u1, rep.rhs_u1);
  side(abc, xyz, rep.lhs_u2, rep.rhs_u2);
  rep.slack_u1 = rep.rhs_u1 - rep.lhs_u1;
  rep.slack_u2 = rep.rhs_u2 - rep.lhs_u2;
  rep.holds = rep.slack_u1 > 0.0 && rep.slack_u2 > 0.0;
  return rep;
}

namespace {

struct GridPoint {
  double t;
  std::vector<double> f, df;  // member values and derivatives at t
};

}  // namespace

FamilyReport family_monotone_verdict(const PolynomialFamily& fam,
                                     MonotoneBranch branch,
                                     FamilyVariant variant, const Polynomial& h,
                                     const TolerancePolicy& tol) {
  const std::size_t n = fam.members.size();
  if (n == 0 || fam.grid_points < 2 || !(fam.t_hi > fam.t_lo))
    throw Error("invalid family");
  if (branch == MonotoneBranch::decreasing && variant != FamilyVariant::plain)
    throw Error("decreasing branch is only defined for the plain variant");

  FamilyReport rep;
  rep.hypothesis_ok = true;

  // Coefficientwise zero-sum of the members, exact.
  std::size_t max_deg = 0;
  for (const Polynomial& p : fam.members)
    max_deg = std::max(max_deg, p.coeffs.size());
  for (std::size_t d = 0; d < max_deg; ++d) {
    double s = 0.0;
    for (const Polynomial& p : fam.members)
      if (d < p.coeffs.size()) s += p.coeffs[d];
    if (s != 0.0) {
      rep.hypothesis_ok = false;
      rep.failed_hypothesis = "members do not sum to the zero polynomial";
      return rep;
    }
  }

  std::vector<Polynomial> dmembers;
  for (const Polynomial& p : fam.members) dmembers.push_back(p.derivative());
  const Polynomial dh = h.derivative();
  const Polynomial ddh = dh.derivative();

  const bool increasing = branch == MonotoneBranch::increasing;
  double f_min = std::numeric_limits<double>::infinity();
  double f_max = -f_min;
  std::vector<GridPoint> grid(fam.grid_points);
  for (int gi = 0; gi < fam.grid_points; ++gi) {
    double t = fam.t_lo + (fam.t_hi - fam.t_lo) * gi / (fam.grid_points - 1);
    GridPoint& gp = grid[gi];
    gp.t = t;
    for (std::size_t i = 0; i < n; ++i) {
      gp.f.push_back(fam.members[i](t));
      gp.df.push_back(dmembers[i](t));
    }
    // Sort members by value at this point; the hypotheses quantify over a
    // labeling, and the pointwise value order is the one Chebyshev uses.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    // Ties in value admit any labeling, so break them by derivative in the
    // direction the ordering check wants.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      if (gp.f[i] != gp.f[j]) return gp.f[i] < gp.f[j];
      return increasing ? gp.df[i] < gp.df[j] : gp.df[i] > gp.df[j];
    });
    for (std::size_t k = 0; k + 1 < n; ++k) {
      double d0 = gp.df[order[k]], d1 = gp.df[order[k + 1]];
      bool ok = increasing ? tol.leq(d0, d1) : tol.geq(d0, d1);
      if (!ok) {
        rep.hypothesis_ok = false;
        rep.first_failing_t = t;
        rep.failed_hypothesis = "derivative ordering";
        return rep;
      }
    }
    for (double fv : gp.f) {
      f_min = std::min(f_min, fv);
      f_max = std::max(f_max, fv);
    }
    if (variant == FamilyVariant::product_h) {
      if (!(h(t) > 0.0) || dh(t) < -tol.abs_tol) {
        rep.hypothesis_ok = false;
        rep.first_failing_t = t;
        rep.failed_hypothesis = "h must be positive and nondecreasing";
        return rep;
      }
    }
  }
  if (variant == FamilyVariant::composed_h) {
    // h' >= 0 and h'' >= 0 on the sampled range of the f_i, 5% margin.
    double span = f_max - f_min;
    double lo = f_min - 0.05 * span, hi = f_max + 0.05 * span;
    for (int gi = 0; gi < fam.grid_points; ++gi) {
      double t = lo + (hi - lo) * gi / (fam.grid_points - 1);
      if (dh(t) < -tol.abs_tol || ddh(t) < -tol.abs_tol) {
        rep.hypothesis_ok = false;
        rep.first_failing_t = t;
        rep.failed_hypothesis = "h must be increasing and convex on range";
        return rep;
      }
    }
  }

  rep.monotone = true;
  double prev = 0.0;
  for (int gi = 0; gi < fam.grid_points; ++gi) {
    const GridPoint& gp = grid[gi];
    double g = 0.0, dg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double e;
      switch (variant) {
        case FamilyVariant::plain:
          e = std::exp(gp.f[i]);
          dg += gp.df[i] * e;
          break;
        case FamilyVariant::product_h:
          e = std::exp(h(gp.t) * gp.f[i]);
          dg += (dh(gp.t) * gp.f[i] + h(gp.t) * gp.df[i]) * e;
          break;
        case FamilyVariant::composed_h:
          e = std::exp(h(gp.f[i]));
          dg += dh(gp.f[i]) * gp.df[i] * e;
          break;
      }
      g += e;
    }
    rep.g_values.push_back(g);
    bool dg_ok = increasing ? dg >= -tol.margin(dg, 0.0) * 1e3
                            : dg <= tol.margin(dg, 0.0) * 1e3;
    bool seq_ok = gi == 0 || (increasing ? tol.leq(prev, g) : tol.geq(prev, g));
    if (!dg_ok || !seq_ok) rep.monotone = false;
    prev = g;
  }
  return rep;
}

ZeroSumTriple triple_from_x(double r_squared, double x) {
  if (!(r_squared > 0.0)) throw DomainError("r^2 must be positive");
  double lo = std::sqrt(r_squared / 6.0);
  double hi = std::sqrt(2.0 * r_squared / 3.0);
  double slack = 1e-12 * std::max(1.0, hi);
  if (x < lo - slack || x > hi + slack) throw OutOfDomain();
  double radicand = -0.75 * x * x + 0.5 * r_squared;
  if (radicand < 0.0) radicand = 0.0;  // endpoint rounding
  double root = std::sqrt(radicand);
  double y = -0.5 * x + root;
  double z = -0.5 * x - root;
  ZeroSumTriple t;
  t.u = x;
  t.v = y;
  t.w = z;
  return t;
}

TripleOrderReport exp_sum_monotone_equiv(const ZeroSumTriple& abc,
                                         const ZeroSumTriple& xyz,
                                         const TolerancePolicy& tol) {
  double r2 = abc.sum_of_squares();
  if (!tol.eq(r2, xyz.sum_of_squares()))
    throw HypothesisViolated("sums of squares differ");
  if (r2 == 0.0) throw HypothesisViolated("r^2 must be nonzero");

  TripleOrderReport rep;
  rep.exp_sum_abc = abc.exp_sum();
  rep.exp_sum_xyz = xyz.exp_sum();
  rep.exp_sum_leq = tol.leq(rep.exp_sum_abc, rep.exp_sum_xyz);
  rep.top_leq = tol.leq(abc.u, xyz.u);
  rep.biconditional = rep.exp_sum_leq == rep.top_leq;
  // At an exact tie either side may round differently; treat equal sums
  // with equal tops as consistent.
  if (tol.eq(rep.exp_sum_abc, rep.exp_sum_xyz) && tol.eq(abc.u, xyz.u))
    rep.biconditional = true;

  auto err = [&](const ZeroSumTriple& t) {
    ZeroSumTriple rec = triple_from_x(r2, t.u);
    return std::max(std::abs(rec.v - t.v), std::abs(rec.w - t.w));
  };
  rep.reconstruction_err = std::max(err(abc), err(xyz));
  return rep;
}

}  // namespace logineq
