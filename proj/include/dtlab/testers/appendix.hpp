#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtlab/algebra.hpp"
#include "dtlab/decision_tree.hpp"
#include "dtlab/oracle.hpp"
#include "dtlab/polynomial.hpp"
#include "dtlab/reductions.hpp"
#include "dtlab/testers/report.hpp"

namespace dtlab::testers {

struct AppendixTesterParams {
  std::size_t d = 1;
  double eps = 0.25;
  double delta = 0.1;
  double find_close_c = 8.0;

  void validate() const {
    if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("eps and delta must lie in (0,1)");
    if (d == 0 || d > 10) throw std::invalid_argument("d must lie in [1,10]");
  }

  [[nodiscard]] std::size_t rounds() const { return static_cast<std::size_t>(std::ceil(4.0 / eps)); }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    return {{"tester", "depth-appendix"}, {"d", d}, {"eps", eps}, {"delta", delta}, {"rounds", rounds()}};
  }
};

/// D = ceil(16 (d ln s + ln(1/eps))) with s the psize of the learned
/// polynomial (at least 1).
inline std::size_t appendix_depth_bound(std::size_t d, std::size_t psize, double eps) {
  const double s = static_cast<double>(std::max<std::size_t>(psize, 1));
  return static_cast<std::size_t>(std::ceil(16.0 * (static_cast<double>(d) * std::log(s) + std::log(1.0 / eps))));
}

/// Minimum index among the variables of g minimizing psize(g_{|x_i<-0}).
inline Var psize_greedy_var(const F2Polynomial& g) {
  const auto vars = g.variables();
  if (vars.empty()) throw std::logic_error("constant polynomial has no split variable");
  Var best = vars.front();
  std::size_t best_size = SIZE_MAX;
  for (Var v : vars) {
    const std::size_t ps = algebra::psize(g.restrict(v, false)).value;
    if (ps < best_size) {
      best_size = ps;
      best = v;
    }
  }
  return best;
}

/// The psize-greedy tree of an explicit polynomial.
inline DecisionTree build_greedy_tree(const F2Polynomial& f) {
  if (f.is_constant()) return DecisionTree::leaf(f.constant_term());
  const Var v = psize_greedy_var(f);
  return DecisionTree::branch(v, build_greedy_tree(f.restrict(v, false)), build_greedy_tree(f.restrict(v, true)));
}

/// Largest number of 0-edges on a root-to-leaf path.
inline std::size_t zero_depth(const DecisionTree& t) {
  std::function<std::size_t(std::uint32_t)> rec = [&](std::uint32_t i) -> std::size_t {
    const auto& nd = t.nodes()[i];
    if (nd.is_leaf) return 0;
    return std::max(1 + rec(nd.lo), rec(nd.hi));
  };
  return rec(t.root());
}

/// Tester for depth-d trees through the psize-greedy tree of the shifted
/// learned polynomial. Every walk also checks that its leaf value equals
/// f'(b).
inline TesterReport test_depth_appendix(Oracle& o, const AppendixTesterParams& p) {
  p.validate();
  const std::size_t n = o.num_vars();
  const std::size_t k = std::size_t{1} << p.d;

  auto proj = reduce::find_close(o, k, p.eps, p.delta / 3, p.find_close_c);
  if (!proj.ok()) return TesterReport::reject("learning failed: more than " + std::to_string(k) + " relevant variables");
  const F2Polynomial h = algebra::interpolate_poly(o, proj.relevant_sorted());
  const std::size_t sparsity = algebra::psize(h).value;
  if (h.degree() > p.d) return TesterReport::reject("learning failed: degree above " + std::to_string(p.d));
  if (sparsity > (std::size_t{1} << (2 * p.d))) return TesterReport::reject("learning failed: too many monomials");

  const auto m = static_cast<std::uint64_t>(std::ceil(24.0 / p.eps * std::log(3.0 / p.delta)));
  std::uint64_t wrong = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto e = o.example();
    wrong += h.eval(e.x) != e.y;
  }
  if (m > 0 && static_cast<double>(wrong) >= p.eps / 4 * static_cast<double>(m))
    return TesterReport::reject("learned polynomial disagrees on " + std::to_string(wrong) + " of " + std::to_string(m) + " examples");

  const std::size_t D = appendix_depth_bound(p.d, sparsity, p.eps);
  TesterReport rep = TesterReport::accept();
  for (std::size_t round = 0; round < p.rounds(); ++round) {
    const Assignment b = o.example().x;
    const Assignment a = Assignment::uniform(n, o.rng());
    const Assignment c = a ^ b;
    F2Polynomial g = h.shift(a);
    std::size_t j = 0;
    while (j <= D && !g.is_constant()) {
      ++j;
      const Var v = psize_greedy_var(g);
      g = g.restrict(v, c.get(v));
    }
    if (j == D + 1) {
      rep.walks.push_back({j, "exceeded"});
      rep.decision = Decision::Reject;
      rep.reason = "walk reached depth " + std::to_string(D + 1);
      return rep;
    }
    ++rep.checks;
    rep.violations += g.constant_term() != h.eval(b);
    rep.walks.push_back({j, "leaf"});
  }
  rep.reason = std::to_string(p.rounds()) + " walks ended within depth " + std::to_string(D);
  return rep;
}

}  // namespace dtlab::testers
