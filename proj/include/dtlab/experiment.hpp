#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtlab/generators.hpp"
#include "dtlab/io.hpp"
#include "dtlab/learners/nonproper.hpp"
#include "dtlab/learners/pac.hpp"
#include "dtlab/learners/universal.hpp"
#include "dtlab/oracle.hpp"
#include "dtlab/reductions.hpp"
#include "dtlab/testers/appendix.hpp"
#include "dtlab/testers/depth.hpp"
#include "dtlab/testers/size.hpp"

// Glue shared by the command-line tool and the test suites: generator specs,
// tester/learner dispatch and seeded batches.
namespace dtlab::exp {

using json = nlohmann::ordered_json;

/// Seed of trial i in a batch. Streams 1 and 2 of a seed are taken by the
/// session itself, so trials use streams from 1000 on.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t i) { return Rng(seed).split(1000 + i).next(); }

/// Seed for generating the hidden function of a trial.
inline std::uint64_t function_seed(std::uint64_t seed) { return Rng(seed).split(3).next(); }

struct GenSpec {
  std::string kind = "tree-depth";  // tree-depth | tree-size | parity | truthtable | poly
  std::size_t n = 8;
  std::size_t depth = 3;
  std::size_t size = 4;
  std::size_t k = 2;
  std::size_t degree = 2;
  std::size_t terms = 4;

  [[nodiscard]] json to_json() const {
    return {{"kind", kind}, {"n", n}, {"depth", depth}, {"size", size}, {"k", k}, {"degree", degree}, {"terms", terms}};
  }
};

inline BooleanFunction generate(const GenSpec& g, std::uint64_t seed) {
  Rng rng(seed);
  if (g.kind == "tree-depth") return {g.n, gen::random_depth_tree(g.n, g.depth, rng)};
  if (g.kind == "tree-size") return {g.n, gen::random_size_tree(g.n, g.size, rng)};
  if (g.kind == "parity") {
    if (g.k > g.n) throw std::invalid_argument("parity needs k <= n");
    return {g.n, gen::parity_poly(g.k)};
  }
  if (g.kind == "truthtable") return BooleanFunction(gen::random_truth_table(g.n, rng));
  if (g.kind == "poly") return {g.n, gen::random_poly(algebra::all_vars(g.n), g.degree, g.terms, rng)};
  throw std::invalid_argument("unknown generator '" + g.kind + "'");
}

struct TesterConfig {
  std::string kind = "depth-df";  // depth-df | size-u | depth-appendix | by-learning
  std::size_t d = 3;
  std::size_t s = 4;
  double eps = 0.25;
  double delta = 0.1;
  bool reduced_constants = false;
  std::optional<std::size_t> walk_cap;
  std::optional<std::size_t> route_cutoff;
};

inline json tester_params(const TesterConfig& c) {
  if (c.kind == "depth-df") {
    testers::DepthTesterParams p{c.d, c.eps, c.delta, std::nullopt, c.route_cutoff};
    return p.to_json();
  }
  if (c.kind == "size-u") {
    testers::SizeTesterParams p;
    p.s = c.s;
    p.eps = c.eps;
    p.delta = c.delta;
    p.reduced_constants = c.reduced_constants;
    p.walk_cap = c.walk_cap;
    return p.to_json();
  }
  if (c.kind == "depth-appendix") return testers::AppendixTesterParams{c.d, c.eps, c.delta}.to_json();
  if (c.kind == "by-learning")
    return {{"tester", "by-learning"}, {"s", c.s}, {"d", c.d}, {"eps", c.eps}, {"delta", c.delta}};
  throw std::invalid_argument("unknown tester '" + c.kind + "'");
}

inline testers::TesterReport run_tester(const TesterConfig& c, OracleSession& session, bool timing = false) {
  const json params = tester_params(c);
  return testers::run_on_session(session, params, [&](Oracle& o) {
    if (c.kind == "depth-df") {
      testers::DepthTesterParams p{c.d, c.eps, c.delta, std::nullopt, c.route_cutoff};
      return testers::test_depth_distfree(o, p);
    }
    if (c.kind == "size-u") {
      testers::SizeTesterParams p;
      p.s = c.s;
      p.eps = c.eps;
      p.delta = c.delta;
      p.reduced_constants = c.reduced_constants;
      p.walk_cap = c.walk_cap;
      return testers::test_size_uniform(o, p);
    }
    if (c.kind == "depth-appendix") return testers::test_depth_appendix(o, {c.d, c.eps, c.delta});
    // Proper DT_d^s learner behind the junta projection, verified on fresh examples.
    return reduce::tester_from_learner(o, c.s, c.eps, c.delta, [&](Oracle& proj, double eps, double delta) {
      learn::LearnParams lp{c.s, std::min(c.d, proj.num_vars()), eps, delta};
      return learn::learn_dtds_distfree(proj, lp);
    });
  }, timing);
}

inline const std::vector<std::string>& learner_names() {
  static const std::vector<std::string> names{"occam",     "occam-reduced", "exact",     "universal", "uniform",
                                              "nonproper", "nonproper-reduced", "dts", "dts-reduced"};
  return names;
}

inline learn::LearnOutcome run_learner_body(const std::string& algo, Oracle& o, const learn::LearnParams& p) {
  if (algo == "occam") return learn::learn_dtds_distfree(o, p);
  if (algo == "occam-reduced") return learn::learn_dtds_reduced(o, p);
  if (algo == "exact") return learn::exact_learn_dtds(o, p);
  if (algo == "universal") return learn::exact_learn_universal(o, p);
  if (algo == "uniform") return learn::learn_dts_uniform_reduced(o, p);
  if (algo == "nonproper") return learn::learn_nonproper(o, p);
  if (algo == "nonproper-reduced") return learn::learn_nonproper_reduced(o, p);
  if (algo == "dts") return learn::learn_dts_distfree(o, p);
  if (algo == "dts-reduced") return learn::learn_dts_reduced(o, p);
  throw std::invalid_argument("unknown learner '" + algo + "'");
}

struct LearnRun {
  enum class Status { Success, Failure, Inconclusive } status = Status::Success;
  learn::LearnOutcome outcome;
  json report;
};

inline LearnRun run_learner(const std::string& algo, OracleSession& session, const learn::LearnParams& p) {
  LearnRun run;
  try {
    run.outcome = run_learner_body(algo, session, p);
    run.status = run.outcome.ok() ? LearnRun::Status::Success : LearnRun::Status::Failure;
  } catch (const BudgetExhausted&) {
    run.status = LearnRun::Status::Inconclusive;
  }
  json r;
  r["status"] = run.status == LearnRun::Status::Success   ? "success"
                : run.status == LearnRun::Status::Failure ? learn::to_string(run.outcome.status)
                                                          : "inconclusive";
  r["reason"] = run.status == LearnRun::Status::Inconclusive ? std::string("query budget exhausted") : run.outcome.detail;
  r["queries"] = {{"bb", session.bb_count()}, {"rex", session.rex_count()}};
  r["params"] = {{"learner", algo}, {"s", p.s}, {"d", p.d}, {"eps", p.eps}, {"delta", p.delta}};
  r["seed"] = session.seed();
  if (run.status == LearnRun::Status::Success) {
    r["size"] = run.outcome.tree.size();
    r["depth"] = run.outcome.tree.depth();
  }
  run.report = std::move(r);
  return run;
}

/// Nearest-rank quantile of a sorted vector.
inline std::uint64_t quantile(const std::vector<std::uint64_t>& sorted, double q) {
  if (sorted.empty()) return 0;
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

struct SuiteConfig {
  TesterConfig tester;
  std::optional<GenSpec> gen;               // fresh function per trial
  std::optional<BooleanFunction> function;  // or one fixed function
  Distribution dist = Distribution::uniform();
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
};

/// Runs the trials in index order and aggregates their decisions and query
/// counts. Each trial owns its session, seeded by trial_seed.
inline json run_suite(const SuiteConfig& c, std::vector<testers::TesterReport>* reports = nullptr) {
  if (!c.gen && !c.function) throw std::invalid_argument("suite needs a generator or a function");
  std::size_t acc = 0, rej = 0, inc = 0;
  std::vector<std::uint64_t> bb, rex;
  json decisions = json::array();
  for (std::size_t i = 0; i < c.trials; ++i) {
    const std::uint64_t s = trial_seed(c.seed, i);
    BooleanFunction f = c.gen ? generate(*c.gen, function_seed(s)) : *c.function;
    OracleSession session(std::move(f), c.dist, s, c.budget);
    auto rep = run_tester(c.tester, session);
    switch (rep.decision) {
      case testers::Decision::Accept: ++acc; break;
      case testers::Decision::Reject: ++rej; break;
      case testers::Decision::Inconclusive: ++inc; break;
    }
    bb.push_back(rep.bb);
    rex.push_back(rep.rex);
    decisions.push_back(testers::to_string(rep.decision));
    if (reports) reports->push_back(std::move(rep));
  }
  std::sort(bb.begin(), bb.end());
  std::sort(rex.begin(), rex.end());
  const double t = c.trials ? static_cast<double>(c.trials) : 1.0;
  json out;
  out["trials"] = c.trials;
  out["accept_rate"] = c.trials ? static_cast<double>(acc) / t : 0.0;
  out["reject_rate"] = c.trials ? static_cast<double>(rej) / t : 0.0;
  out["inconclusive"] = inc;
  out["bb"] = {{"p50", quantile(bb, 0.5)}, {"p90", quantile(bb, 0.9)}, {"max", bb.empty() ? 0 : bb.back()}};
  out["rex"] = {{"p50", quantile(rex, 0.5)}, {"p90", quantile(rex, 0.9)}, {"max", rex.empty() ? 0 : rex.back()}};
  out["params"] = tester_params(c.tester);
  if (c.gen) out["generator"] = c.gen->to_json();
  out["seed"] = c.seed;
  out["decisions"] = std::move(decisions);
  return out;
}

}  // namespace dtlab::exp
