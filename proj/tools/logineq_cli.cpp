#include "logineq/expineq.hpp"
#include "logineq/fuzz.hpp"
#include "logineq/infoineq.hpp"
#include "logineq/majorization.hpp"
#include "logineq/optimize.hpp"
#include "logineq/ssli.hpp"
#include "logineq/sympoly.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using logineq::Error;
using logineq::PositiveVector;
using logineq::Rational;
using logineq::TolerancePolicy;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCritical = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitFinding = 3;
constexpr int kExitNoConverge = 4;
constexpr int kExitUsage = 64;

// "p/q" or "p" with integer parts; everything else is a plain float.
bool parse_rational(const std::string& s, Rational& out) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      out = Rational(boost::multiprecision::cpp_int(s));
    } else {
      boost::multiprecision::cpp_int num(s.substr(0, slash));
      boost::multiprecision::cpp_int den(s.substr(slash + 1));
      if (den <= 0) return false;
      out = Rational(num, den);
    }
    return true;
  } catch (...) {
    return false;
  }
}

PositiveVector parse_vector(const json& arr) {
  if (!arr.is_array() || arr.empty()) throw Error("expected a nonempty array");
  std::vector<double> entries;
  std::vector<Rational> exact;
  bool all_exact = true;
  for (const json& e : arr) {
    if (e.is_string()) {
      Rational r;
      if (!parse_rational(e.get<std::string>(), r))
        throw Error("bad rational literal: " + e.get<std::string>());
      exact.push_back(r);
      entries.push_back(static_cast<double>(r));
    } else if (e.is_number()) {
      double d = e.get<double>();
      entries.push_back(d);
      exact.push_back(Rational(0));
      all_exact = false;
    } else {
      throw Error("vector entries must be numbers or p/q strings");
    }
  }
  if (all_exact) return PositiveVector(std::move(entries), std::move(exact));
  return PositiveVector(std::move(entries));
}

logineq::ZeroSumTriple parse_triple(const json& arr, const TolerancePolicy& tol) {
  if (!arr.is_array() || arr.size() != 3) throw Error("triple needs 3 numbers");
  return logineq::ZeroSumTriple(arr[0].get<double>(), arr[1].get<double>(),
                                arr[2].get<double>(), tol);
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("rename failed for " + path);
}

void emit(const std::string& out_path, const json& report) {
  if (!out_path.empty()) atomic_write(out_path, report.dump(2) + "\n");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LOGINEQ_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

json vec_json(const std::vector<double>& v) { return json(v); }

int run_check(const std::string& subject, const json& in,
              const std::string& out_path, const TolerancePolicy& tol,
              bool common_reindex) {
  json report;
  report["schema"] = 1;
  report["subject"] = subject;
  int code = kExitOk;

  if (subject == "ssli-conjecture") {
    logineq::SsliInstance inst{parse_vector(in.at("a")), parse_vector(in.at("b"))};
    logineq::SsliVerdict v = logineq::conjecture_verdict(inst, tol);
    bool hyp = v.hypothesis == logineq::SsliHypothesis::conjecture_1_2;
    report["hypothesis"] = hyp;
    report["lhs"] = v.lhs;
    report["rhs"] = v.rhs;
    report["slack"] = v.slack;
    report["holds"] = v.holds;
    code = !hyp ? kExitHypothesis : v.holds ? kExitOk : kExitFinding;
    std::cout << "ssli-conjecture: hypothesis=" << (hyp ? "yes" : "no")
              << " lhs=" << v.lhs << " rhs=" << v.rhs << " slack=" << v.slack
              << '\n';
  } else if (subject == "ssli-rearrangement") {
    logineq::SsliInstance inst{parse_vector(in.at("a")), parse_vector(in.at("b"))};
    logineq::PairingOptions opts;
    opts.common_reindex = common_reindex;
    logineq::SsliVerdict v = logineq::thm32_verdict(inst, tol, opts);
    logineq::PairingResult pr = logineq::find_pairing(inst, tol, opts);
    bool hyp = v.hypothesis == logineq::SsliHypothesis::thm_3_2a ||
               v.hypothesis == logineq::SsliHypothesis::thm_3_2b;
    report["pairing_found"] = pr.found;
    report["exhaustive"] = pr.exhaustive;
    report["nodes_explored"] = pr.nodes_explored;
    report["hypothesis"] =
        v.hypothesis == logineq::SsliHypothesis::thm_3_2a   ? "3.2a"
        : v.hypothesis == logineq::SsliHypothesis::thm_3_2b ? "3.2b"
                                                            : "none";
    report["ratios"] = vec_json(pr.ratios);
    report["products"] = vec_json(pr.products);
    report["lhs"] = v.lhs;
    report["rhs"] = v.rhs;
    report["slack"] = v.slack;
    code = !hyp ? kExitHypothesis : v.holds ? kExitOk : kExitCritical;
    std::cout << "ssli-rearrangement: hypothesis="
              << report["hypothesis"].get<std::string>() << " slack=" << v.slack
              << '\n';
  } else if (subject == "powered") {
    logineq::SsliVerdict v = logineq::powered_logs_verdict(
        parse_vector(in.at("a")), parse_vector(in.at("b")),
        in.at("p").get<double>(), tol);
    bool hyp = v.hypothesis == logineq::SsliHypothesis::thm_3_4;
    report["hypothesis"] = hyp;
    report["lhs"] = v.lhs;
    report["rhs"] = v.rhs;
    report["slack"] = v.slack;
    code = !hyp ? kExitHypothesis : v.holds ? kExitOk : kExitCritical;
    std::cout << "powered: hypothesis=" << (hyp ? "yes" : "no")
              << " slack=" << v.slack << '\n';
  } else if (subject == "majorize") {
    logineq::MajorizationVerdict v =
        logineq::majorize(parse_vector(in.at("a")), parse_vector(in.at("b")), tol);
    report["strong"] = v.strong;
    report["weak_below"] = v.weak_below;
    report["weak_above"] = v.weak_above;
    report["log_weak_below"] = v.log_weak_below;
    report["log_weak_above"] = v.log_weak_above;
    report["log_strong"] = v.log_strong;
    std::cout << "majorize: strong=" << v.strong
              << " weak_below=" << v.weak_below
              << " weak_above=" << v.weak_above << '\n';
  } else if (subject == "logsum") {
    PositiveVector a = parse_vector(in.at("a"));
    PositiveVector b = parse_vector(in.at("b"));
    double gap;
    if (in.contains("ks")) {
      logineq::ShiftSet ks(in.at("ks").get<std::vector<double>>());
      gap = logineq::generalized_log_sum_gap(a, b, ks);
    } else {
      gap = logineq::stronger_log_sum_gap(a, b, in.value("k", 0.0));
    }
    report["gap"] = gap;
    code = gap >= -tol.abs_tol ? kExitOk : kExitCritical;
    std::cout << "logsum: gap=" << gap << '\n';
  } else if (subject == "gibbs") {
    logineq::ProbabilityVector a(parse_vector(in.at("a")).entries(), tol);
    logineq::ProbabilityVector b(parse_vector(in.at("b")).entries(), tol);
    logineq::GibbsReport r = logineq::gibbs_forms(a, b, tol);
    report["kl"] = r.kl;
    report["cross_entropy"] = r.cross_entropy;
    report["entropy"] = r.entropy;
    report["forms_agree"] = r.forms_agree;
    report["variational_ok"] = r.variational_ok;
    bool ok = r.forms_agree && r.holds && r.variational_ok;
    code = ok ? kExitOk : kExitCritical;
    std::cout << "gibbs: kl=" << r.kl << " agree=" << r.forms_agree << '\n';
  } else if (subject == "cardano") {
    try {
      logineq::CardanoReport r = logineq::cardano_exp_inequality(
          parse_triple(in.at("xyz"), tol), parse_triple(in.at("abc"), tol), tol);
      report["slack_u1"] = r.slack_u1;
      report["slack_u2"] = r.slack_u2;
      code = r.holds ? kExitOk : kExitCritical;
      std::cout << "cardano: slack_u1=" << r.slack_u1
                << " slack_u2=" << r.slack_u2 << '\n';
    } catch (const logineq::DegenerateTriple& e) {
      std::cout << "cardano: " << e.what() << '\n';
      code = kExitHypothesis;
    } catch (const logineq::SumOfSquaresMismatch& e) {
      std::cout << "cardano: " << e.what() << '\n';
      code = kExitHypothesis;
    }
  } else if (subject == "triple-equiv") {
    try {
      logineq::TripleOrderReport r = logineq::exp_sum_monotone_equiv(
          parse_triple(in.at("abc"), tol), parse_triple(in.at("xyz"), tol), tol);
      report["exp_sum_abc"] = r.exp_sum_abc;
      report["exp_sum_xyz"] = r.exp_sum_xyz;
      report["biconditional"] = r.biconditional;
      code = r.biconditional ? kExitOk : kExitCritical;
      std::cout << "triple-equiv: biconditional=" << r.biconditional << '\n';
    } catch (const logineq::HypothesisViolated& e) {
      std::cout << "triple-equiv: " << e.what() << '\n';
      code = kExitHypothesis;
    }
  } else if (subject == "family") {
    const json& fj = in.at("family");
    logineq::PolynomialFamily fam;
    for (const json& m : fj.at("members"))
      fam.members.push_back({m.get<std::vector<double>>()});
    fam.t_lo = fj.at("interval")[0].get<double>();
    fam.t_hi = fj.at("interval")[1].get<double>();
    fam.grid_points = fj.value("grid_points", 257);
    std::string vs = fj.value("variant", "plain");
    logineq::FamilyVariant variant =
        vs == "product_h"    ? logineq::FamilyVariant::product_h
        : vs == "composed_h" ? logineq::FamilyVariant::composed_h
                             : logineq::FamilyVariant::plain;
    logineq::MonotoneBranch branch =
        fj.value("branch", "increasing") == std::string("decreasing")
            ? logineq::MonotoneBranch::decreasing
            : logineq::MonotoneBranch::increasing;
    logineq::Polynomial h{{0.0, 1.0}};
    if (fj.contains("h")) h.coeffs = fj.at("h").get<std::vector<double>>();
    logineq::FamilyReport r =
        logineq::family_monotone_verdict(fam, branch, variant, h, tol);
    report["hypothesis_ok"] = r.hypothesis_ok;
    report["monotone"] = r.monotone;
    if (!r.hypothesis_ok) {
      report["first_failing_t"] = r.first_failing_t;
      report["failed_hypothesis"] = r.failed_hypothesis;
    }
    code = !r.hypothesis_ok ? kExitHypothesis
           : r.monotone     ? kExitOk
                            : kExitCritical;
    std::cout << "family: hypothesis_ok=" << r.hypothesis_ok
              << " monotone=" << r.monotone << '\n';
  } else {
    std::cerr << "unknown subject: " << subject << '\n';
    return kExitUsage;
  }

  report["exit_code"] = code;
  emit(out_path, report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inequality verification and conjecture search toolkit"};
  app.require_subcommand(1);

  // check
  std::string subject, input_path, out_path;
  double tol_value = 1e-9;
  bool common_reindex = false;
  CLI::App* check = app.add_subcommand("check", "Check a single instance");
  check->add_option("subject", subject,
                    "ssli-conjecture|ssli-rearrangement|powered|majorize|"
                    "logsum|gibbs|cardano|triple-equiv|family")
      ->required();
  check->add_option("--input", input_path, "instance JSON file")->required();
  check->add_option("--out", out_path, "JSON report path");
  check->add_option("--tol", tol_value, "abs/rel tolerance");
  check->add_flag("--common-reindex", common_reindex,
                  "restrict rearrangement to a common permutation");

  // fuzz
  std::string theorem, fuzz_out, fuzz_format = "json";
  std::uint64_t trials = 10'000, seed = default_seed();
  std::size_t n_min = 2, n_max = 8;
  CLI::App* fuzz = app.add_subcommand("fuzz", "Run a theorem fuzz campaign");
  fuzz->add_option("theorem", theorem, "theorem id (e.g. thm_3_2)")->required();
  fuzz->add_option("--trials", trials);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--n", n_min, "fix n (sets both bounds)");
  fuzz->add_option("--n-max", n_max);
  fuzz->add_option("--out", fuzz_out, "report path (.json; .csv also written)");
  fuzz->add_option("--format", fuzz_format, "json|csv for stdout");

  // minimize
  std::string min_input, min_out;
  int starts = 16;
  std::uint64_t min_seed = default_seed();
  CLI::App* minimize =
      app.add_subcommand("minimize", "Numerically attack the SSLI infimum");
  minimize->add_option("--input", min_input, "instance JSON with \"a\"")
      ->required();
  minimize->add_option("--starts", starts);
  minimize->add_option("--seed", min_seed);
  minimize->add_option("--out", min_out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // --help and friends stay successful
  }

  try {
    TolerancePolicy tol;
    tol.abs_tol = tol.rel_tol = tol_value;

    if (check->parsed()) {
      return run_check(subject, load_input(input_path), out_path, tol,
                       common_reindex);
    }

    if (fuzz->parsed()) {
      logineq::TheoremId id = logineq::theorem_from_name(theorem);
      logineq::FuzzConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      if (fuzz->count("--n")) cfg.n_min = cfg.n_max = n_min;
      if (fuzz->count("--n-max")) cfg.n_max = n_max;
      logineq::InequalityReport rep = logineq::run_campaign(id, cfg);
      if (!fuzz_out.empty()) {
        atomic_write(fuzz_out, rep.to_json());
        std::string csv_path = fuzz_out;
        auto dot = csv_path.rfind(".json");
        if (dot != std::string::npos) csv_path.resize(dot);
        atomic_write(csv_path + ".csv", rep.to_csv());
      }
      std::cout << (fuzz_format == "csv" ? rep.to_csv() : rep.to_json());
      if (rep.violations.empty()) return kExitOk;
      return rep.severity == logineq::Severity::CRITICAL ? kExitCritical
                                                         : kExitFinding;
    }

    if (minimize->parsed()) {
      json in = load_input(min_input);
      PositiveVector a = parse_vector(in.at("a"));
      if (a.size() < 2) {
        std::cerr << "minimize: need n >= 2\n";
        return kExitUsage;
      }
      logineq::OptimizerConfig cfg;
      cfg.starts = starts;
      cfg.seed = min_seed;
      logineq::MinimizationResult res;
      try {
        res = logineq::minimize_ssli(a, cfg);
      } catch (const logineq::DidNotConverge& e) {
        std::cerr << "minimize: " << e.what() << '\n';
        return kExitNoConverge;
      }
      json rep;
      rep["schema"] = 1;
      rep["target"] = res.target_value;
      rep["best_value"] = res.best_value;
      rep["gap"] = res.gap;
      rep["residual"] = res.feasibility_residual;
      rep["best_b"] = vec_json(res.best_b.entries());
      json traces = json::array();
      for (const auto& t : res.per_start_trace)
        traces.push_back({{"start", t.start},
                          {"value", t.final_value},
                          {"residual", t.residual}});
      rep["per_start_trace"] = traces;
      emit(min_out, rep);
      std::cout << "minimize: target=" << res.target_value
                << " best=" << res.best_value << " gap=" << res.gap
                << " residual=" << res.feasibility_residual << '\n';
      return res.gap >= -1e-6 ? kExitOk : kExitFinding;
    }
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
