#pragma once

#include "logineq/core.hpp"
#include "logineq/rng.hpp"
#include "logineq/ssli.hpp"

#include <cstdint>
#include <string>

namespace logineq {

enum class TheoremId {
  conj_1_2,
  thm_3_2,
  thm_3_4,
  prop_4_1,
  thm_4_2,
  thm_4_4,
  thm_4_8,
  lemma_5_2,
  prop_5_4,
  cor_5_5,
  cor_5_6,
};

enum class Severity { CRITICAL, FINDING };

// Only the conjecture downgrades to FINDING; every other registered
// statement is a proven theorem, so a violation means an implementation bug.
Severity severity_of(TheoremId id);

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);  // throws Error

struct FuzzConfig {
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  double mag_lo = std::exp(-3.0);  // log-uniform magnitude bounds
  double mag_hi = std::exp(3.0);
};

struct TrialRow {
  std::uint64_t trial = 0;
  std::size_t n = 0;
  double slack = 0.0;
  bool ok = true;
};

struct Violation {
  std::uint64_t trial = 0;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;
  std::string input;  // JSON snapshot for reproduction
};

struct InequalityReport {
  TheoremId theorem = TheoremId::conj_1_2;
  Severity severity = Severity::CRITICAL;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string sampler;
  double min_slack = 0.0;  // +inf sentinel when trials == 0
  std::vector<Violation> violations;
  std::vector<TrialRow> rows;

  std::string to_json() const;
  std::string to_csv() const;
};

// Hypothesis-constructing samplers (each output satisfies the matching
// hypothesis predicate by construction; campaigns re-check it).
std::pair<PositiveVector, PositiveVector> sample_majorized_pair(std::size_t n,
                                                               Rng& rng);
SsliInstance sample_thm32_instance(std::size_t n, Rng& rng);
SsliInstance sample_conjecture_instance(std::size_t n, Rng& rng, double mag_lo,
                                        double mag_hi);

InequalityReport run_campaign(TheoremId id, const FuzzConfig& cfg);

}  // namespace logineq
