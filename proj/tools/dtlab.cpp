// dtlab: generate functions, run learners and testers, compute distances and
// run seeded batches. Reports are single-line JSON on stdout.
//
// Exit codes: 0 accept/success, 1 reject/failure, 2 inconclusive, 3 usage.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtlab/dtlab.hpp"

namespace {

using dtlab::exp::json;

constexpr int kUsage = 3;

struct Common {
  std::string fn;
  std::string dist;
  double eps = 0.25;
  double delta = 0.1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000'000;
  std::string out;
  bool pretty = false;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c, bool function_file) {
  if (function_file) app->add_option("--fn", c.fn, "function file (JSON)")->required()->check(CLI::ExistingFile);
  app->add_option("--dist", c.dist, "distribution file (JSON); uniform when omitted")->check(CLI::ExistingFile);
  app->add_option("--eps", c.eps, "distance parameter")->check(CLI::Range(1e-6, 0.999999));
  app->add_option("--delta", c.delta, "failure probability")->check(CLI::Range(1e-12, 0.999999));
  app->add_option("--seed", c.seed, "64-bit seed");
  app->add_option("--budget", c.budget, "bound on bb+rex queries")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output file");
  app->add_flag("--pretty", c.pretty, "indented JSON");
  app->add_flag("--timing", c.timing, "add elapsed_ms to reports (breaks byte-identical output)");
}

dtlab::Distribution load_dist(const std::string& path) {
  return path.empty() ? dtlab::Distribution::uniform() : dtlab::io::distribution_from_json(dtlab::io::read_json_file(path));
}

void emit(const json& j, const Common& c, bool to_file) {
  const std::string text = dtlab::io::dump(j, c.pretty);
  if (to_file && !c.out.empty())
    dtlab::io::write_text_file(c.out, text);
  else
    std::cout << text << '\n';
}

int decision_code(dtlab::testers::Decision d) {
  switch (d) {
    case dtlab::testers::Decision::Accept: return 0;
    case dtlab::testers::Decision::Reject: return 1;
    case dtlab::testers::Decision::Inconclusive: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision-tree learners and testers"};
  app.require_subcommand(1);

  // gen
  Common gc;
  dtlab::exp::GenSpec spec;
  auto* gen = app.add_subcommand("gen", "generate a function file");
  gen->add_option("kind", spec.kind, "tree-depth | tree-size | parity | truthtable | poly")
      ->required()
      ->check(CLI::IsMember({"tree-depth", "tree-size", "parity", "truthtable", "poly"}));
  gen->add_option("--n", spec.n, "number of variables")->check(CLI::Range(1, 4096));
  gen->add_option("--depth", spec.depth, "depth bound (tree-depth)");
  gen->add_option("--size", spec.size, "leaf count (tree-size)");
  gen->add_option("--k", spec.k, "parity width");
  gen->add_option("--degree", spec.degree, "degree bound (poly)");
  gen->add_option("--terms", spec.terms, "monomial count (poly)");
  gen->add_option("--seed", gc.seed, "64-bit seed");
  gen->add_option("--out", gc.out, "output file");
  gen->add_flag("--pretty", gc.pretty, "indented JSON");

  // learn
  Common lc;
  dtlab::learn::LearnParams lp;
  std::string algo = "occam-reduced";
  auto* learn = app.add_subcommand("learn", "run a learner; the hypothesis goes to --out");
  add_common(learn, lc, true);
  learn->add_option("--algo", algo, "learner")->check(CLI::IsMember(dtlab::exp::learner_names()));
  learn->add_option("--s", lp.s, "size bound")->check(CLI::PositiveNumber);
  learn->add_option("--d", lp.d, "depth bound");

  // test
  Common tc;
  dtlab::exp::TesterConfig tcfg;
  auto* test = app.add_subcommand("test", "run a tester");
  test->add_option("tester", tcfg.kind, "depth-df | size-u | depth-appendix | by-learning")
      ->required()
      ->check(CLI::IsMember({"depth-df", "size-u", "depth-appendix", "by-learning"}));
  add_common(test, tc, true);
  test->add_option("--d", tcfg.d, "depth bound");
  test->add_option("--s", tcfg.s, "size bound")->check(CLI::PositiveNumber);
  test->add_flag("--reduced-constants", tcfg.reduced_constants, "desk-scale walk constants (size-u)");
  std::optional<std::size_t> walk_cap, cutoff;
  test->add_option("--walk-cap", walk_cap, "override the walk cap (size-u)");
  test->add_option("--route-cutoff", cutoff, "override the route cutoff (depth-df)");

  // distance
  Common dc;
  std::string gfile, mode = "exact";
  std::size_t samples = 10000;
  auto* dist = app.add_subcommand("distance", "Pr_D[f != g]");
  add_common(dist, dc, true);
  dist->add_option("--g", gfile, "second function file")->required()->check(CLI::ExistingFile);
  dist->add_option("--mode", mode, "exact | sampled")->check(CLI::IsMember({"exact", "sampled"}));
  dist->add_option("--m", samples, "sample count (sampled mode)");

  // suite
  Common sc;
  dtlab::exp::SuiteConfig scfg;
  dtlab::exp::GenSpec sgen;
  std::string sgen_kind;
  std::size_t trials = 10;
  auto* suite = app.add_subcommand("suite", "seeded batch of tester runs");
  suite->add_option("tester", scfg.tester.kind, "tester")
      ->required()
      ->check(CLI::IsMember({"depth-df", "size-u", "depth-appendix", "by-learning"}));
  add_common(suite, sc, false);
  suite->add_option("--fn", sc.fn, "fixed function file")->check(CLI::ExistingFile);
  suite->add_option("--gen", sgen_kind, "generator kind for a fresh function per trial")
      ->check(CLI::IsMember({"tree-depth", "tree-size", "parity", "truthtable", "poly"}));
  suite->add_option("--n", sgen.n, "generator: variables");
  suite->add_option("--depth", sgen.depth, "generator: depth");
  suite->add_option("--size", sgen.size, "generator: leaves");
  suite->add_option("--k", sgen.k, "generator: parity width");
  suite->add_option("--degree", sgen.degree, "generator: degree");
  suite->add_option("--terms", sgen.terms, "generator: monomials");
  suite->add_option("--trials", trials, "number of trials");
  suite->add_option("--d", scfg.tester.d, "depth bound");
  suite->add_option("--s", scfg.tester.s, "size bound")->check(CLI::PositiveNumber);
  suite->add_flag("--reduced-constants", scfg.tester.reduced_constants, "desk-scale walk constants (size-u)");
  std::optional<std::size_t> s_walk_cap;
  suite->add_option("--walk-cap", s_walk_cap, "override the walk cap (size-u)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      auto f = dtlab::exp::generate(spec, gc.seed);
      emit(dtlab::io::function_to_json(f), gc, true);
      return 0;
    }

    if (*learn) {
      auto f = dtlab::io::function_from_json(dtlab::io::read_json_file(lc.fn));
      dtlab::OracleSession session(std::move(f), load_dist(lc.dist), lc.seed, lc.budget);
      lp.eps = lc.eps;
      lp.delta = lc.delta;
      auto run = dtlab::exp::run_learner(algo, session, lp);
      if (run.status == dtlab::exp::LearnRun::Status::Success && !lc.out.empty())
        dtlab::io::write_text_file(lc.out, dtlab::io::dump(dtlab::io::tree_to_json(session.num_vars(), run.outcome.tree), lc.pretty));
      else if (run.status == dtlab::exp::LearnRun::Status::Success)
        run.report["hypothesis"] = dtlab::io::tree_to_json(session.num_vars(), run.outcome.tree);
      std::cout << dtlab::io::dump(run.report, lc.pretty) << '\n';
      return run.status == dtlab::exp::LearnRun::Status::Success   ? 0
             : run.status == dtlab::exp::LearnRun::Status::Failure ? 1
                                                                   : 2;
    }

    if (*test) {
      auto f = dtlab::io::function_from_json(dtlab::io::read_json_file(tc.fn));
      dtlab::OracleSession session(std::move(f), load_dist(tc.dist), tc.seed, tc.budget);
      tcfg.eps = tc.eps;
      tcfg.delta = tc.delta;
      tcfg.walk_cap = walk_cap;
      tcfg.route_cutoff = cutoff;
      auto rep = dtlab::exp::run_tester(tcfg, session, tc.timing);
      emit(rep.to_json(), tc, true);
      return decision_code(rep.decision);
    }

    if (*dist) {
      auto f = dtlab::io::function_from_json(dtlab::io::read_json_file(dc.fn));
      auto g = dtlab::io::function_from_json(dtlab::io::read_json_file(gfile));
      const auto d = load_dist(dc.dist);
      const double p = mode == "exact" ? dtlab::distance_exact(f, g, d) : dtlab::distance_sampled(f, g, d, samples, dc.seed);
      json j{{"distance", p}, {"mode", mode}};
      if (mode == "sampled") {
        j["m"] = samples;
        j["seed"] = dc.seed;
      }
      emit(j, dc, true);
      return 0;
    }

    if (*suite) {
      if (sc.fn.empty() == sgen_kind.empty()) {
        std::cerr << "suite: give exactly one of --fn and --gen\n";
        return kUsage;
      }
      if (!sgen_kind.empty()) {
        sgen.kind = sgen_kind;
        scfg.gen = sgen;
      } else {
        scfg.function = dtlab::io::function_from_json(dtlab::io::read_json_file(sc.fn));
      }
      scfg.dist = load_dist(sc.dist);
      scfg.trials = trials;
      scfg.seed = sc.seed;
      scfg.budget = sc.budget;
      scfg.tester.eps = sc.eps;
      scfg.tester.delta = sc.delta;
      scfg.tester.walk_cap = s_walk_cap;
      emit(dtlab::exp::run_suite(scfg), sc, true);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "dtlab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
