#include "logineq/fuzz.hpp"

#include "logineq/expineq.hpp"
#include "logineq/infoineq.hpp"
#include "logineq/majorization.hpp"
#include "logineq/optimize.hpp"
#include "logineq/sympoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace logineq {

using nlohmann::json;

Severity severity_of(TheoremId id) {
  return id == TheoremId::conj_1_2 ? Severity::FINDING : Severity::CRITICAL;
}

namespace {

constexpr std::pair<TheoremId, const char*> kNames[] = {
    {TheoremId::conj_1_2, "conj_1_2"},   {TheoremId::thm_3_2, "thm_3_2"},
    {TheoremId::thm_3_4, "thm_3_4"},     {TheoremId::prop_4_1, "prop_4_1"},
    {TheoremId::thm_4_2, "thm_4_2"},     {TheoremId::thm_4_4, "thm_4_4"},
    {TheoremId::thm_4_8, "thm_4_8"},     {TheoremId::lemma_5_2, "lemma_5_2"},
    {TheoremId::prop_5_4, "prop_5_4"},   {TheoremId::cor_5_5, "cor_5_5"},
    {TheoremId::cor_5_6, "cor_5_6"},
};

}  // namespace

const char* theorem_name(TheoremId id) {
  for (auto [t, name] : kNames)
    if (t == id) return name;
  return "unknown";
}

TheoremId theorem_from_name(const std::string& name) {
  for (auto [t, n] : kNames)
    if (name == n) return t;
  throw Error("unknown theorem id: " + name);
}

namespace {

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

std::vector<double> random_positive(std::size_t n, Rng& rng, double lo,
                                    double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = log_uniform(rng, lo, hi);
  return v;
}

json vec_json(const std::vector<double>& v) { return json(v); }

}  // namespace

std::pair<PositiveVector, PositiveVector> sample_majorized_pair(std::size_t n,
                                                               Rng& rng) {
  std::vector<double> y =
      random_positive(n, rng, std::exp(-3.0), std::exp(3.0));
  std::vector<double> x = y;
  // T-transforms: averaging a coordinate pair toward the mean keeps the
  // result majorized by the original and preserves positivity.
  std::size_t moves = 1 + rng.index(2 * n);
  for (std::size_t m = 0; m < moves; ++m) {
    std::size_t i = rng.index(n), j = rng.index(n);
    if (i == j) continue;
    double t = rng.uniform01();
    double xi = x[i], xj = x[j];
    x[i] = (1.0 - 0.5 * t) * xi + 0.5 * t * xj;
    x[j] = 0.5 * t * xi + (1.0 - 0.5 * t) * xj;
  }
  return {PositiveVector(std::move(x)), PositiveVector(std::move(y))};
}

SsliInstance sample_thm32_instance(std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    // Descending ratios and products; a_i = sqrt(p_i/r_i), b_i = sqrt(p_i r_i).
    std::vector<double> r = sort_desc(random_positive(n, rng, 0.3, 3.0));
    std::vector<double> p = sort_desc(random_positive(n, rng, 0.3, 3.0));
    double prod_r = 1.0;
    for (double ri : r) prod_r *= ri;
    if (prod_r < 1.0) {
      // e_n(b)/e_n(a) = prod r must be >= 1 for (3.2a); invert and reverse.
      for (double& ri : r) ri = 1.0 / ri;
      std::reverse(r.begin(), r.end());
    }
    std::vector<double> a(n), b(n);
    double ena = 1.0, enb = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = std::sqrt(p[i] / r[i]);
      b[i] = std::sqrt(p[i] * r[i]);
      ena *= a[i];
      enb *= b[i];
    }
    // Common rescaling moves e_n(a) e_n(b) across 1 without touching the
    // ratio or product orderings' validity (products scale monotonically).
    if (ena * enb < 1.0) {
      double s = std::pow(1.0 / (ena * enb), 1.0 / (2.0 * n)) * 1.05;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] *= s;
        b[i] *= s;
      }
    }
    SsliInstance inst{PositiveVector(a), PositiveVector(b)};
    // Half of the instances exercise condition (3.2b) via the reciprocal map.
    if (rng.uniform01() < 0.5) inst = reciprocal(inst);
    return inst;
  }
  throw Error("sample_thm32_instance: retries exhausted");
}

SsliInstance sample_conjecture_instance(std::size_t n, Rng& rng, double mag_lo,
                                        double mag_hi) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<double> b = random_positive(n, rng, mag_lo, mag_hi);
    std::vector<double> lb = log_vector(b);
    double mean = 0.0;
    for (double l : lb) mean += l;
    mean /= n;
    double t = rng.uniform(0.05, 0.95);
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i)
      a[i] = std::exp(mean + t * (lb[i] - mean));
    SsliInstance inst{PositiveVector(a), PositiveVector(b)};
    // Contraction in log space preserves the log-sum and empirically lands
    // in E_a; reject against the exact predicate to keep the campaign honest.
    if (conjecture_hypothesis(inst)) return inst;
  }
  throw Error("sample_conjecture_instance: retries exhausted");
}

namespace {

struct TrialOutcome {
  std::size_t n = 0;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;
  bool ok = true;
  json input;
};

ZeroSumTriple sample_triple(Rng& rng) {
  for (;;) {
    double u = rng.uniform(-3.0, 3.0);
    double v = rng.uniform(-3.0, 3.0);
    double w = -u - v;
    double vals[3] = {u, v, w};
    std::sort(vals, vals + 3, std::greater<double>{});
    if (vals[0] - vals[1] < 1e-3 || vals[1] - vals[2] < 1e-3) continue;
    ZeroSumTriple t;
    t.u = vals[0];
    t.v = vals[1];
    t.w = vals[2];
    if (t.sum_of_squares() < 1e-6) continue;
    return t;
  }
}

double sample_in_domain(Rng& rng, double r2) {
  double lo = std::sqrt(r2 / 6.0), hi = std::sqrt(2.0 * r2 / 3.0);
  return rng.uniform(lo, hi);
}

TrialOutcome eval_trial(TheoremId id, const FuzzConfig& cfg, Rng& rng) {
  const TolerancePolicy tol{};
  TrialOutcome out;
  std::size_t n = cfg.n_min + rng.index(cfg.n_max - cfg.n_min + 1);
  out.n = n;

  switch (id) {
    case TheoremId::conj_1_2: {
      SsliInstance inst =
          sample_conjecture_instance(n, rng, cfg.mag_lo, cfg.mag_hi);
      SsliVerdict v = conjecture_verdict(inst, tol);
      out.lhs = v.lhs;
      out.rhs = v.rhs;
      out.slack = v.slack;
      out.ok = v.hypothesis == SsliHypothesis::conjecture_1_2 && v.holds;
      out.input = {{"a", vec_json(inst.a.entries())},
                   {"b", vec_json(inst.b.entries())}};
      break;
    }
    case TheoremId::thm_3_2: {
      SsliInstance inst = sample_thm32_instance(n, rng);
      SsliVerdict v = thm32_verdict(inst, tol);
      out.lhs = v.lhs;
      out.rhs = v.rhs;
      out.slack = v.slack;
      out.ok = v.hypothesis != SsliHypothesis::none &&
               v.hypothesis != SsliHypothesis::conjecture_1_2 && v.holds;
      out.input = {{"a", vec_json(inst.a.entries())},
                   {"b", vec_json(inst.b.entries())}};
      break;
    }
    case TheoremId::thm_3_4: {
      std::vector<double> b = sort_asc(random_positive(n, rng, 1.05, 20.0));
      std::vector<double> a(n);
      for (std::size_t i = 0; i < n; ++i)
        a[i] = b[i] + rng.uniform(0.0, 2.0);
      double p = -rng.uniform(0.2, 3.0);
      PositiveVector av(a), bv(b);
      SsliVerdict v = powered_logs_verdict(av, bv, p, tol);
      out.lhs = v.lhs;
      out.rhs = v.rhs;
      out.slack = v.slack;
      out.ok = v.hypothesis == SsliHypothesis::thm_3_4 && v.holds;
      out.input = {{"a", vec_json(a)}, {"b", vec_json(b)}, {"p", p}};
      break;
    }
    case TheoremId::prop_4_1: {
      std::vector<double> y = random_positive(n, rng, cfg.mag_lo, cfg.mag_hi);
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = y[i] * std::exp(-rng.uniform(0.0, 1.0));
      const double ms[3] = {0.5, 1.0, 3.0};
      double m = ms[rng.index(3)];
      PositiveVector xv(x), yv(y);
      double sx = 0.0, sy = 0.0;
      for (double e : x) sx += std::exp(m * e);
      for (double e : y) sy += std::exp(m * e);
      out.lhs = sx;
      out.rhs = sy;
      out.slack = sy - sx;
      try {
        out.ok = exp_sum_weak_log(xv, yv, m, tol) == HypothesisStatus::satisfied;
      } catch (const HypothesisViolated&) {
        out.ok = false;
      }
      out.input = {{"x", vec_json(x)}, {"y", vec_json(y)}, {"m", m}};
      break;
    }
    case TheoremId::thm_4_2: {
      ZeroSumTriple xyz = sample_triple(rng);
      double r2 = xyz.sum_of_squares();
      ZeroSumTriple abc;
      do {
        abc = triple_from_x(r2, sample_in_domain(rng, r2));
      } while (!abc.distinct(1e-3));
      CardanoReport rep = cardano_exp_inequality(xyz, abc, tol);
      out.lhs = rep.lhs_u1;
      out.rhs = rep.rhs_u1;
      out.slack = std::min(rep.slack_u1, rep.slack_u2);
      bool bound_ok = xyz.pairwise_sum() < cardano_bound(xyz) &&
                      abc.pairwise_sum() < cardano_bound(abc);
      out.ok = rep.holds && bound_ok;
      out.input = {{"xyz", {xyz.u, xyz.v, xyz.w}}, {"abc", {abc.u, abc.v, abc.w}}};
      break;
    }
    case TheoremId::thm_4_4: {
      // c sorted ascending with exact zero sum; f_i = c_i * q with q > 0 and
      // q' > 0 on the interval, so the ordering hypotheses hold throughout.
      std::size_t fam_n = 2 + rng.index(4);
      std::vector<double> c(fam_n);
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < fam_n; ++i) {
        // Dyadic grid: sums of these are exact in any association order, so
        // the zero-sum constraint survives the sort below.
        c[i] = std::round(rng.uniform(-2.0, 2.0) * 1048576.0) / 1048576.0;
        s += c[i];
      }
      c[fam_n - 1] = -s;
      std::sort(c.begin(), c.end());
      // Power-of-two q coefficients keep the coefficientwise zero-sum exact.
      double alpha = std::ldexp(1.0, static_cast<int>(rng.index(4)) - 1);
      double beta = std::ldexp(1.0, static_cast<int>(rng.index(4)) - 1);
      double gamma = rng.index(2) ? std::ldexp(1.0, -(int)rng.index(3)) : 0.0;
      PolynomialFamily fam;
      for (double ci : c)
        fam.members.push_back({{ci * alpha, ci * beta, ci * gamma}});
      fam.t_lo = rng.uniform(0.1, 1.0);
      fam.t_hi = fam.t_lo + rng.uniform(0.5, 3.0);
      fam.grid_points = 65;
      int which = static_cast<int>(rng.index(3));
      FamilyVariant variant = which == 0 ? FamilyVariant::plain
                              : which == 1 ? FamilyVariant::product_h
                                           : FamilyVariant::composed_h;
      Polynomial h{{0.0, std::ldexp(1.0, static_cast<int>(rng.index(3)))}};
      FamilyReport rep = family_monotone_verdict(
          fam, MonotoneBranch::increasing, variant, h, tol);
      double min_step = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i + 1 < rep.g_values.size(); ++i)
        min_step = std::min(min_step, rep.g_values[i + 1] - rep.g_values[i]);
      out.slack = rep.g_values.size() > 1 ? min_step : 0.0;
      out.ok = rep.hypothesis_ok && rep.monotone;
      out.input = {{"c", vec_json(c)},
                   {"q", {alpha, beta, gamma}},
                   {"interval", {fam.t_lo, fam.t_hi}},
                   {"variant", which}};
      break;
    }
    case TheoremId::thm_4_8: {
      double r2 = rng.uniform(0.5, 20.0);
      ZeroSumTriple abc = triple_from_x(r2, sample_in_domain(rng, r2));
      ZeroSumTriple xyz = triple_from_x(r2, sample_in_domain(rng, r2));
      TripleOrderReport rep = exp_sum_monotone_equiv(abc, xyz, tol);
      out.lhs = rep.exp_sum_abc;
      out.rhs = rep.exp_sum_xyz;
      out.slack = rep.exp_sum_xyz - rep.exp_sum_abc;
      out.ok = rep.biconditional && rep.reconstruction_err <= 1e-9;
      out.input = {{"abc", {abc.u, abc.v, abc.w}},
                   {"xyz", {xyz.u, xyz.v, xyz.w}}};
      break;
    }
    case TheoremId::lemma_5_2: {
      std::vector<double> a = random_positive(n, rng, cfg.mag_lo, cfg.mag_hi);
      std::vector<double> b = random_positive(n, rng, cfg.mag_lo, cfg.mag_hi);
      const double ks[4] = {0.0, 0.5, 1.0, 10.0};
      double k = ks[rng.index(4)];
      double gap = stronger_log_sum_gap(PositiveVector(a), PositiveVector(b), k);
      out.slack = gap;
      out.ok = gap >= -1e-9;
      out.input = {{"a", vec_json(a)}, {"b", vec_json(b)}, {"k", k}};
      break;
    }
    case TheoremId::prop_5_4: {
      ProbabilityVector a(sample_simplex(n, rng));
      ProbabilityVector b(sample_simplex(n, rng));
      GibbsReport rep = gibbs_forms(a, b, tol, 32, rng.next());
      out.lhs = rep.entropy;
      out.rhs = rep.cross_entropy;
      out.slack = rep.kl;
      out.ok = rep.forms_agree && rep.holds && rep.variational_ok;
      out.input = {{"a", vec_json(a.entries())}, {"b", vec_json(b.entries())}};
      break;
    }
    case TheoremId::cor_5_5:
    case TheoremId::cor_5_6: {
      bool prob = id == TheoremId::cor_5_6;
      std::vector<double> av =
          prob ? sample_simplex(n, rng)
               : random_positive(n, rng, cfg.mag_lo, cfg.mag_hi);
      std::vector<double> bv =
          prob ? sample_simplex(n, rng)
               : random_positive(n, rng, cfg.mag_lo, cfg.mag_hi);
      std::size_t m = 1 + rng.index(4);
      std::vector<double> ks(m);
      for (double& k : ks) k = rng.uniform(0.0, 10.0);
      if (prob) {
        ProbabilityVector a(av), b(bv);
        out.slack = generalized_information_gap(a, b, ShiftSet(ks));
        out.ok = out.slack >= -1e-9;
      } else {
        PositiveVector a(av), b(bv);
        double gap = generalized_log_sum_gap(a, b, ShiftSet(ks));
        // Independent single-pass evaluation of the product form.
        double sum_a = 0.0, sum_b = 0.0, lhs = 0.0;
        for (double x : av) sum_a += x;
        for (double x : bv) sum_b += x;
        for (std::size_t i = 0; i < n; ++i) {
          double prod = 1.0;
          for (double k : ks) prod *= av[i] / bv[i] + k;
          lhs += av[i] * std::log(prod);
        }
        double prod = 1.0;
        for (double k : ks) prod *= sum_a / sum_b + k;
        double direct = lhs - sum_a * std::log(prod);
        out.slack = gap;
        double scale = std::max({1.0, std::abs(gap), std::abs(direct)});
        out.ok = gap >= -1e-9 && std::abs(gap - direct) <= 1e-9 * scale;
      }
      out.input = {{"a", vec_json(av)}, {"b", vec_json(bv)}, {"ks", ks}};
      break;
    }
  }
  return out;
}

const char* sampler_name(TheoremId id) {
  switch (id) {
    case TheoremId::conj_1_2: return "log-contraction+reject (splitmix64)";
    case TheoremId::thm_3_2: return "ratio-product chain construction (splitmix64)";
    case TheoremId::thm_3_4: return "ascending dominance shift (splitmix64)";
    case TheoremId::prop_4_1: return "entrywise shrink (splitmix64)";
    case TheoremId::thm_4_2: return "zero-sum triples, matched r^2 (splitmix64)";
    case TheoremId::thm_4_4: return "scaled positive-increasing q family (splitmix64)";
    case TheoremId::thm_4_8: return "D_r parametrization (splitmix64)";
    default: return "log-uniform / exponential-spacings simplex (splitmix64)";
  }
}

}  // namespace

InequalityReport run_campaign(TheoremId id, const FuzzConfig& cfg) {
  InequalityReport rep;
  rep.theorem = id;
  rep.severity = severity_of(id);
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.sampler = sampler_name(id);
  rep.min_slack = std::numeric_limits<double>::infinity();
  rep.rows.reserve(cfg.trials);

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = Rng::stream(cfg.seed, trial);
    TrialOutcome out = eval_trial(id, cfg, rng);
    rep.min_slack = std::min(rep.min_slack, out.slack);
    rep.rows.push_back({trial, out.n, out.slack, out.ok});
    if (!out.ok)
      rep.violations.push_back(
          {trial, out.lhs, out.rhs, out.slack, out.input.dump()});
  }
  return rep;
}

std::string InequalityReport::to_json() const {
  json j;
  j["schema"] = 1;
  j["theorem_id"] = theorem_name(theorem);
  j["severity"] = severity == Severity::CRITICAL ? "CRITICAL" : "FINDING";
  j["trials"] = trials;
  j["seed"] = seed;
  j["sampler"] = sampler;
  if (std::isinf(min_slack))
    j["min_slack"] = "+inf";
  else
    j["min_slack"] = min_slack;
  j["violation_count"] = violations.size();
  json vs = json::array();
  for (const Violation& v : violations) {
    vs.push_back({{"trial", v.trial},
                  {"lhs", v.lhs},
                  {"rhs", v.rhs},
                  {"slack", v.slack},
                  {"input", json::parse(v.input)}});
  }
  j["violations"] = vs;
  return j.dump(2) + "\n";
}

std::string InequalityReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "theorem_id,trial,n,slack,verdict,seed\n";
  for (const TrialRow& r : rows) {
    os << theorem_name(theorem) << ',' << r.trial << ',' << r.n << ','
       << r.slack << ',' << (r.ok ? "ok" : "violation") << ',' << seed << '\n';
  }
  return os.str();
}

}  // namespace logineq
