#include "logineq/ssli.hpp"

#include "logineq/sympoly.hpp"

#include <algorithm>
#include <cmath>

namespace logineq {

double sum_squared_logs(const PositiveVector& v) {
  double s = 0.0;
  for (double x : v.entries()) {
    if (!(x > 0.0)) throw NonPositiveEntry();
    double l = std::log(x);
    s += l * l;
  }
  return s;
}

bool conjecture_hypothesis(const SsliInstance& inst,
                           const TolerancePolicy& tol) {
  const std::size_t n = inst.a.size();
  if (n != inst.b.size()) throw LengthMismatch();
  if (inst.a.has_exact() && inst.b.has_exact()) {
    std::vector<Rational> ea = elementary_symmetric_all(*inst.a.exact());
    std::vector<Rational> eb = elementary_symmetric_all(*inst.b.exact());
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (ea[k] > eb[k]) return false;
    return ea[n - 1] == eb[n - 1];
  }
  std::vector<double> ea = elementary_symmetric_all(inst.a.entries());
  std::vector<double> eb = elementary_symmetric_all(inst.b.entries());
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!tol.leq(ea[k], eb[k])) return false;
  return tol.eq(ea[n - 1], eb[n - 1]);
}

namespace {

struct Pair {
  std::size_t ia, ib;
  double ratio, product;
};

// A candidate set of pairs is valid iff sorting by ratio descending, with
// tied-ratio blocks ordered by product descending, yields a nonincreasing
// product chain.
bool chain_check(std::vector<Pair>& pairs, const TolerancePolicy& tol) {
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& p, const Pair& q) {
    if (p.ratio != q.ratio) return p.ratio > q.ratio;
    return p.product > q.product;
  });
  // Re-sort tolerance-equal ratio blocks by product descending.
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i + 1;
    while (j < pairs.size() && tol.eq(pairs[j].ratio, pairs[i].ratio)) ++j;
    std::stable_sort(pairs.begin() + i, pairs.begin() + j,
                     [](const Pair& p, const Pair& q) { return p.product > q.product; });
    i = j;
  }
  for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
    if (!tol.geq(pairs[k].ratio, pairs[k + 1].ratio)) return false;
    if (!tol.geq(pairs[k].product, pairs[k + 1].product)) return false;
  }
  return true;
}

struct Search {
  const std::vector<double>* a;
  const std::vector<double>* b;
  const TolerancePolicy* tol;
  bool common_reindex = false;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
  std::vector<bool> used_a, used_b;
  std::vector<Pair> chain;

  bool extend(std::size_t depth, double prev_ratio, double prev_product) {
    const std::size_t n = a->size();
    if (depth == n) return true;
    // Avoid retrying value-identical (a,b) choices at the same depth.
    std::vector<std::pair<double, double>> tried;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (common_reindex && j != i) continue;
        if (used_b[j]) continue;
        if (++nodes > budget) {
          truncated = true;
          return false;
        }
        double ratio = (*b)[j] / (*a)[i];
        double product = (*a)[i] * (*b)[j];
        if (depth > 0 && (!tol->geq(prev_ratio, ratio) ||
                          !tol->geq(prev_product, product)))
          continue;
        std::pair<double, double> key{(*a)[i], (*b)[j]};
        if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
        tried.push_back(key);
        used_a[i] = used_b[j] = true;
        chain.push_back({i, j, ratio, product});
        if (extend(depth + 1, ratio, product)) return true;
        chain.pop_back();
        used_a[i] = used_b[j] = false;
        if (truncated) return false;
      }
    }
    return false;
  }
};

}  // namespace

PairingResult find_pairing(const SsliInstance& inst, const TolerancePolicy& tol,
                           const PairingOptions& opts) {
  const std::size_t n = inst.a.size();
  if (n != inst.b.size()) throw LengthMismatch();

  PairingResult res;
  if (n > opts.exhaustive_cutoff) {
    // Heuristic mode: try a handful of canonical pairings and verify each.
    const std::vector<double> aa = sort_asc(inst.a.entries());
    const std::vector<double> ad = sort_desc(inst.a.entries());
    const std::vector<double> bd = sort_desc(inst.b.entries());
    auto try_candidate = [&](const std::vector<double>& av,
                             const std::vector<double>& bv) {
      std::vector<Pair> pairs;
      for (std::size_t i = 0; i < n; ++i)
        pairs.push_back({i, i, bv[i] / av[i], av[i] * bv[i]});
      if (!chain_check(pairs, tol)) return false;
      res.found = true;
      for (const Pair& p : pairs) {
        res.permutation_a.push_back(p.ia);
        res.permutation_b.push_back(p.ib);
        res.ratios.push_back(p.ratio);
        res.products.push_back(p.product);
      }
      return true;
    };
    if (!try_candidate(aa, bd)) try_candidate(ad, bd);
    res.exhaustive = false;
    return res;
  }

  Search s;
  s.a = &inst.a.entries();
  s.b = &inst.b.entries();
  s.tol = &tol;
  s.common_reindex = opts.common_reindex;
  s.budget = opts.node_budget;
  s.used_a.assign(n, false);
  s.used_b.assign(n, false);
  bool found = s.extend(0, 0.0, 0.0);
  if (s.truncated) throw SearchBudgetExceeded();
  res.found = found;
  res.exhaustive = true;
  res.nodes_explored = s.nodes;
  if (found) {
    for (const Pair& p : s.chain) {
      res.permutation_a.push_back(p.ia);
      res.permutation_b.push_back(p.ib);
      res.ratios.push_back(p.ratio);
      res.products.push_back(p.product);
    }
  }
  return res;
}

SsliVerdict thm32_verdict(const SsliInstance& inst, const TolerancePolicy& tol,
                          const PairingOptions& opts) {
  const std::size_t n = inst.a.size();
  if (n != inst.b.size()) throw LengthMismatch();

  SsliVerdict v;
  v.lhs = sum_squared_logs(inst.a);
  v.rhs = sum_squared_logs(inst.b);
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -tol.margin(v.lhs, v.rhs);

  PairingResult pairing = find_pairing(inst, tol, opts);
  if (pairing.found) {
    double ena = 1.0, enb = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      ena *= inst.a[i];
      enb *= inst.b[i];
    }
    if (tol.leq(ena, enb) && tol.geq(ena * enb, 1.0))
      v.hypothesis = SsliHypothesis::thm_3_2a;
    else if (tol.geq(ena, enb) && tol.leq(ena * enb, 1.0))
      v.hypothesis = SsliHypothesis::thm_3_2b;
  }
  return v;
}

SsliVerdict powered_logs_verdict(const PositiveVector& a,
                                 const PositiveVector& b, double p,
                                 const TolerancePolicy& tol) {
  if (a.size() != b.size()) throw LengthMismatch();
  if (!(p < 0.0)) throw NonNegativeExponent();
  for (double x : a.entries())
    if (!(x > 1.0)) throw EntryNotAboveOne();
  for (double x : b.entries())
    if (!(x > 1.0)) throw EntryNotAboveOne();

  SsliVerdict v;
  for (double x : a.entries()) v.lhs += std::pow(std::log(x), p);
  for (double x : b.entries()) v.rhs += std::pow(std::log(x), p);
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -tol.margin(v.lhs, v.rhs);
  if (majorize(a, b, tol).weak_above) v.hypothesis = SsliHypothesis::thm_3_4;
  return v;
}

SsliVerdict conjecture_verdict(const SsliInstance& inst,
                               const TolerancePolicy& tol) {
  SsliVerdict v;
  v.lhs = sum_squared_logs(inst.a);
  v.rhs = sum_squared_logs(inst.b);
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -tol.margin(v.lhs, v.rhs);
  if (conjecture_hypothesis(inst, tol))
    v.hypothesis = SsliHypothesis::conjecture_1_2;
  return v;
}

Remark35Report remark35_boundary(const PositiveVector& a,
                                 const PositiveVector& b,
                                 const TolerancePolicy& tol) {
  if (a.size() != b.size()) throw LengthMismatch();
  Remark35Report r;
  r.a_majorized_by_b = majorize(a, b, tol).strong;
  r.lhs = sum_squared_logs(a);
  r.rhs = sum_squared_logs(b);
  if (tol.eq(r.lhs, r.rhs))
    r.ssli_direction = 0;
  else
    r.ssli_direction = r.lhs < r.rhs ? -1 : 1;
  double ena = 1.0, enb = 1.0;
  for (double x : a.entries()) ena *= x;
  for (double x : b.entries()) enb *= x;
  r.en_equal = tol.eq(ena, enb);
  std::vector<double> ad = sort_desc(a.entries());
  std::vector<double> bd = sort_desc(b.entries());
  r.sorted_equal = true;
  for (std::size_t i = 0; i < ad.size(); ++i)
    if (!tol.eq(ad[i], bd[i])) r.sorted_equal = false;
  return r;
}

SsliInstance reciprocal(const SsliInstance& inst) {
  const std::size_t n = inst.a.size();
  std::vector<double> ra(n), rb(n);
  for (std::size_t i = 0; i < n; ++i) {
    ra[i] = 1.0 / inst.a[n - 1 - i];
    rb[i] = 1.0 / inst.b[n - 1 - i];
  }
  return {PositiveVector(std::move(ra)), PositiveVector(std::move(rb))};
}

}  // namespace logineq
