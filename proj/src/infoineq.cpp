#include "logineq/infoineq.hpp"

#include "logineq/rng.hpp"

#include <cmath>

namespace logineq {

ProbabilityVector::ProbabilityVector(std::vector<double> entries,
                                     const TolerancePolicy& tol)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw NotProbabilityVector();
  double s = 0.0;
  for (double x : entries_) {
    if (!(x > 0.0)) throw NotProbabilityVector();
    s += x;
  }
  if (!tol.eq(s, 1.0)) throw NotProbabilityVector();
}

double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q,
                     const TolerancePolicy&) {
  if (p.size() != q.size()) throw LengthMismatch();
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    d += p[i] * std::log(p[i] / q[i]);
  return d;
}

double stronger_log_sum_gap(const PositiveVector& a, const PositiveVector& b,
                            double k) {
  if (a.size() != b.size()) throw LengthMismatch();
  if (k < 0.0) throw NegativeShift();
  double sum_a = 0.0, sum_b = 0.0, lhs = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    lhs += a[i] * std::log(a[i] / b[i] + k);
    sum_a += a[i];
    sum_b += b[i];
  }
  double rhs = sum_a * std::log(sum_a / sum_b + k);
  return lhs - rhs;
}

double generalized_log_sum_gap(const PositiveVector& a, const PositiveVector& b,
                               const ShiftSet& ks) {
  double gap = 0.0;
  for (double k : ks.ks) gap += stronger_log_sum_gap(a, b, k);
  return gap;
}

GibbsReport gibbs_forms(const ProbabilityVector& a, const ProbabilityVector& b,
                        const TolerancePolicy& tol, int variational_samples,
                        std::uint64_t seed) {
  if (a.size() != b.size()) throw LengthMismatch();
  const std::size_t n = a.size();
  GibbsReport r;
  r.geo_mean_b = 1.0;
  r.geo_mean_a = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    r.geo_mean_b *= std::pow(b[i], a[i]);
    r.geo_mean_a *= std::pow(a[i], a[i]);
    r.cross_entropy += a[i] * (-std::log(b[i]));
    r.entropy += a[i] * (-std::log(a[i]));
    r.kl += a[i] * std::log(a[i] / b[i]);
  }
  bool form_i = tol.leq(r.geo_mean_b, r.geo_mean_a);
  bool form_ii = tol.geq(r.cross_entropy, r.entropy);
  bool form_iii = form_ii;  // same comparison, stated subtractively
  bool form_iv = tol.geq(r.kl, 0.0);
  r.forms_agree = form_i == form_ii && form_ii == form_iii && form_iii == form_iv;
  r.holds = form_iv;

  // Variational side of the sup/inf claims: no sampled xi beats a itself.
  r.variational_ok = true;
  Rng rng = Rng::stream(seed, 0x9b);
  for (int s = 0; s < variational_samples; ++s) {
    std::vector<double> xi = sample_simplex(n, rng);
    double geo = 1.0, neg_log = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      geo *= std::pow(xi[i], a[i]);
      neg_log += a[i] * (-std::log(xi[i]));
    }
    if (!tol.leq(geo, r.geo_mean_a) || !tol.geq(neg_log, r.entropy))
      r.variational_ok = false;
  }
  return r;
}

double generalized_information_gap(const ProbabilityVector& a,
                                   const ProbabilityVector& b,
                                   const ShiftSet& ks) {
  if (a.size() != b.size()) throw LengthMismatch();
  double lhs = 0.0, rhs = 0.0;
  for (double k : ks.ks) {
    if (k < 0.0) throw NegativeShift();
    for (std::size_t i = 0; i < a.size(); ++i)
      lhs += a[i] * std::log(a[i] / b[i] + k);
    rhs += std::log(1.0 + k);
  }
  return lhs - rhs;
}

std::vector<double> sample_simplex(std::size_t n, Rng& rng) {
  std::vector<double> e(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = -std::log(rng.open01());
    total += e[i];
  }
  for (double& x : e) x /= total;
  return e;
}

}  // namespace logineq
